#pragma once

#include <cstdint>
#include <vector>

#include "lsr/core.hpp"

namespace lsr {

struct EvalReport {
    double precision = 0.0;
    double recall = 0.0;
    double f_h = 0.0;  // 100 * 2pr / (p + r), 0 when p + r = 0
    std::size_t matched_pred_pixels = 0;
    std::size_t total_pred_pixels = 0;
    std::size_t matched_ref_pixels = 0;
    std::size_t total_ref_pixels = 0;
};

// Union of digital lines, one per segment. Endpoints are rounded to the
// nearest pixel center; thickness 1 draws 8-connected Bresenham lines,
// larger thickness marks pixels within thickness/2 of the segment. Pixels
// outside the grid are clipped.
std::vector<std::uint8_t> rasterize_segments(const std::vector<LineSegment>& segments, int width,
                                             int height, double thickness = 1.0);

// Pixel-wise precision/recall at tolerance tolerance_fraction * diagonal;
// a rasterized pixel matches when some counterpart pixel lies within the
// tolerance (<=, exact Euclidean distances).
EvalReport score(const std::vector<LineSegment>& pred, const std::vector<LineSegment>& ref,
                 int width, int height, double tolerance_fraction = 0.01,
                 double raster_thickness = 1.0);

// score() restricted to predictions with confidence >= threshold, once per
// threshold; thresholds must be sorted ascending.
std::vector<std::pair<double, EvalReport>> score_with_confidence_sweep(
    const std::vector<LineSegment>& pred, const std::vector<LineSegment>& ref, int width,
    int height, const std::vector<double>& thresholds, double tolerance_fraction = 0.01,
    double raster_thickness = 1.0);

// Exact squared Euclidean distance transform of a binary raster: each cell
// gets the squared distance to the nearest set pixel (infinity if none).
std::vector<double> squared_distance_transform(const std::vector<std::uint8_t>& raster, int width,
                                               int height);

}  // namespace lsr
