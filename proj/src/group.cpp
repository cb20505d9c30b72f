#include "lsr/group.hpp"

#include <algorithm>
#include <cmath>

namespace lsr {

namespace {

// Matches the zero-resultant tolerance of circular_mean_angle: each pixel
// contributes a unit vector, so |pixels| bounds the total weight.
bool resultant_defined(double re, double im, std::size_t n) {
    return std::hypot(re, im) > 1e-12 * static_cast<double>(n);
}

}  // namespace

LevelLineAngle LineSupportRegion::mean_angle() const {
    if (pixels.empty())
        throw std::invalid_argument("LineSupportRegion: empty region has no mean angle");
    if (!resultant_defined(resultant_re, resultant_im, pixels.size()))
        throw UndefinedMeanError();
    return LevelLineAngle(0.5 * std::atan2(resultant_im, resultant_re));
}

void GroupingParams::validate() const {
    if (!(distance_tau > 0.0))
        throw std::invalid_argument("GroupingParams: distance_tau must be > 0");
    if (min_region_size < 1)
        throw std::invalid_argument("GroupingParams: min_region_size must be >= 1");
    if (!(alpha >= 0.0))
        throw std::invalid_argument("GroupingParams: alpha must be >= 0");
}

double similarity(PixelCoord g, const HeatmapField& field, const LineSupportRegion& region,
                  double alpha) {
    if (region.pixels.empty())
        throw std::invalid_argument("similarity: empty region");
    if (!resultant_defined(region.resultant_re, region.resultant_im, region.pixels.size()))
        throw UndefinedMeanError();

    // rho^2(F(g), phi_R) = 2 - 2*cos(2F(g) - 2phi_R), evaluated against the
    // normalized resultant so no phase extraction is needed.
    const double norm = std::hypot(region.resultant_re, region.resultant_im);
    const double u = region.resultant_re / norm;
    const double v = region.resultant_im / norm;
    const double f2 = 2.0 * field.field().at(g.x, g.y);
    const double rho_sq = 2.0 - 2.0 * (std::cos(f2) * u + std::sin(f2) * v);

    const double dm = field.mask().at(g.x, g.y) - region.mean_mask();
    return rho_sq + alpha * dm * dm;
}

RegionStats region_stats(const LineSupportRegion& region) {
    if (region.pixels.empty())
        throw std::invalid_argument("region_stats: empty region");
    return RegionStats{region.mean_mask(), region.mean_angle()};
}

namespace {

struct GrowContext {
    const HeatmapField& field;
    const ForegroundMask& fg;
    int width;
    int height;
    // cos/sin of the doubled field angle, filled for foreground pixels
    std::vector<double> cos2f;
    std::vector<double> sin2f;
    std::vector<std::uint8_t> used;
    std::vector<std::uint8_t> queued;  // member of the current candidate set
};

inline void admit(GrowContext& ctx, LineSupportRegion& region, int idx) {
    const int x = idx % ctx.width;
    const int y = idx / ctx.width;
    region.pixels.push_back({x, y});
    region.sum_mask += ctx.field.mask().at(x, y);
    region.resultant_re += ctx.cos2f[idx];
    region.resultant_im += ctx.sin2f[idx];
    ctx.used[idx] = 1;
}

// similarity() against the running sums, using the precomputed tables.
// A vanished resultant (possible only when tau > 2 lets opposing angles in)
// leaves phi_R undefined; such a region treats every candidate as maximally
// dissimilar in angle, rho^2 = 4, which keeps the tau -> infinity limit the
// plain connected-components grouping.
inline double similarity_fast(const GrowContext& ctx, const LineSupportRegion& region, int idx,
                              double alpha) {
    const double norm = std::hypot(region.resultant_re, region.resultant_im);
    double rho_sq = 4.0;
    if (resultant_defined(region.resultant_re, region.resultant_im, region.pixels.size())) {
        const double u = region.resultant_re / norm;
        const double v = region.resultant_im / norm;
        rho_sq = 2.0 - 2.0 * (ctx.cos2f[idx] * u + ctx.sin2f[idx] * v);
    }
    const double dm = ctx.field.mask().data()[idx] - region.mean_mask();
    return rho_sq + alpha * dm * dm;
}

// 8-neighbors of idx that are foreground, unused, and not yet candidates
inline void collect_neighbors(GrowContext& ctx, int idx, std::vector<int>& out) {
    const int x = idx % ctx.width;
    const int y = idx / ctx.width;
    for (int dy = -1; dy <= 1; ++dy) {
        const int ny = y + dy;
        if (ny < 0 || ny >= ctx.height)
            continue;
        for (int dx = -1; dx <= 1; ++dx) {
            if (dx == 0 && dy == 0)
                continue;
            const int nx = x + dx;
            if (nx < 0 || nx >= ctx.width)
                continue;
            const int nidx = ny * ctx.width + nx;
            if (!ctx.fg.data[nidx] || ctx.used[nidx] || ctx.queued[nidx])
                continue;
            ctx.queued[nidx] = 1;
            out.push_back(nidx);
        }
    }
}

}  // namespace

std::vector<LineSupportRegion> grow_regions(const HeatmapField& field, const ForegroundMask& b,
                                            const GroupingParams& params) {
    params.validate();
    if (field.width() != b.width || field.height() != b.height)
        throw std::invalid_argument("grow_regions: mask/field dimension mismatch");

    const int w = field.width();
    const int h = field.height();
    const std::size_t n = static_cast<std::size_t>(w) * h;

    std::vector<int> seeds;
    seeds.reserve(b.count());
    for (std::size_t i = 0; i < n; ++i)
        if (b.data[i])
            seeds.push_back(static_cast<int>(i));
    if (seeds.empty())
        return {};

    // decreasing M, row-major on ties (total order keeps runs deterministic)
    const std::vector<double>& mask = field.mask().data();
    std::sort(seeds.begin(), seeds.end(), [&mask](int a, int c) {
        if (mask[a] != mask[c])
            return mask[a] > mask[c];
        return a < c;
    });

    GrowContext ctx{field, b, w, h,
                    std::vector<double>(n, 0.0), std::vector<double>(n, 0.0),
                    std::vector<std::uint8_t>(n, 0), std::vector<std::uint8_t>(n, 0)};
    const std::vector<double>& angles = field.field().data();
    for (int idx : seeds) {
        ctx.cos2f[idx] = std::cos(2.0 * angles[idx]);
        ctx.sin2f[idx] = std::sin(2.0 * angles[idx]);
    }

    std::vector<LineSupportRegion> regions;
    std::vector<int> candidates;  // sorted row-major: N_8(R) minus used pixels
    std::vector<int> fresh;       // neighbors gained in the current pass
    std::vector<int> next;

    for (int seed : seeds) {
        if (ctx.used[seed])
            continue;

        LineSupportRegion region;
        admit(ctx, region, seed);

        candidates.clear();
        collect_neighbors(ctx, seed, candidates);
        std::sort(candidates.begin(), candidates.end());

        bool region_updated = true;
        while (region_updated && !candidates.empty()) {
            region_updated = false;
            fresh.clear();
            std::size_t keep = 0;
            for (std::size_t i = 0; i < candidates.size(); ++i) {
                const int idx = candidates[i];
                if (similarity_fast(ctx, region, idx, params.alpha) < params.distance_tau) {
                    ctx.queued[idx] = 0;
                    admit(ctx, region, idx);
                    collect_neighbors(ctx, idx, fresh);
                    region_updated = true;
                } else {
                    candidates[keep++] = idx;  // stays a candidate for later passes
                }
            }
            candidates.resize(keep);
            if (!fresh.empty()) {
                std::sort(fresh.begin(), fresh.end());
                next.resize(candidates.size() + fresh.size());
                std::merge(candidates.begin(), candidates.end(), fresh.begin(), fresh.end(),
                           next.begin());
                candidates.swap(next);
            }
        }
        for (int idx : candidates)
            ctx.queued[idx] = 0;

        if (region.pixels.size() >= params.min_region_size)
            regions.push_back(std::move(region));
    }
    return regions;
}

}  // namespace lsr
