#pragma once

#include <vector>

#include "lsr/core.hpp"
#include "lsr/segment.hpp"

namespace lsr {

// One line support region: the admitted pixels (in admission order, seed
// first) plus incrementally maintained statistics.
struct LineSupportRegion {
    std::vector<PixelCoord> pixels;
    double sum_mask = 0.0;      // running sum of M over the region
    double resultant_re = 0.0;  // running sum of e^{2iF}
    double resultant_im = 0.0;

    std::size_t size() const { return pixels.size(); }
    // I_R: mean mask value over the region.
    double mean_mask() const { return sum_mask / static_cast<double>(pixels.size()); }
    // phi_R: half the phase of the doubled-angle resultant.
    // Throws UndefinedMeanError when the resultant vanishes.
    LevelLineAngle mean_angle() const;
};

struct GroupingParams {
    double distance_tau = 0.5;      // similarity admission threshold
    std::size_t min_region_size = 5;
    double alpha = 1.0;             // mask-term weight in the similarity

    void validate() const;
};

struct RegionStats {
    double mean_mask = 0.0;
    LevelLineAngle mean_angle;
};

// Similarity d(g, R) = rho^2(F(g), phi_R) + alpha * (M(g) - I_R)^2.
double similarity(PixelCoord g, const HeatmapField& field, const LineSupportRegion& region,
                  double alpha);

// Region grouping: seeds iterate in decreasing-M order (row-major on ties);
// each seed region repeatedly scans its 8-neighborhood in row-major order,
// admitting unused foreground pixels with similarity < tau, until a full
// pass admits nothing. Regions smaller than min_region_size are dropped.
std::vector<LineSupportRegion> grow_regions(const HeatmapField& field, const ForegroundMask& b,
                                            const GroupingParams& params);

// Cached statistics (I_R, phi_R) of a region.
RegionStats region_stats(const LineSupportRegion& region);

}  // namespace lsr
