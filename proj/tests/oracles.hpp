// Independent reference implementations used to cross-check the library.
// Everything here recomputes from first principles and stays free of the
// optimized code paths under test.
#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <vector>

#include "lsr/core.hpp"
#include "lsr/group.hpp"
#include "lsr/segment.hpp"

namespace oracle {

// angle distance via explicit complex arithmetic, ||z1^2 - z2^2||
inline double angle_distance_complex(double a, double b) {
    const std::complex<double> z1 = std::polar(1.0, a);
    const std::complex<double> z2 = std::polar(1.0, b);
    return std::abs(z1 * z1 - z2 * z2);
}

// 2D Gaussian-weighted window mean around (x, y), replicate border
inline double gaussian_window_mean(const lsr::ImageGrid& m, int x, int y, int radius,
                                   double sigma) {
    double num = 0.0, den = 0.0;
    for (int dy = -radius; dy <= radius; ++dy) {
        for (int dx = -radius; dx <= radius; ++dx) {
            const double w =
                std::exp(-0.5 * (dx / sigma) * (dx / sigma)) *
                std::exp(-0.5 * (dy / sigma) * (dy / sigma));
            const int cx = std::clamp(x + dx, 0, m.width() - 1);
            const int cy = std::clamp(y + dy, 0, m.height() - 1);
            num += w * m.at(cx, cy);
            den += w;
        }
    }
    return num / den;
}

// literal Algorithm 1: every pass rescans the full region neighborhood and
// recomputes region statistics from scratch for each candidate
inline std::vector<lsr::LineSupportRegion> naive_grow_regions(const lsr::HeatmapField& field,
                                                              const lsr::ForegroundMask& b,
                                                              const lsr::GroupingParams& params) {
    const int w = field.width();
    const int h = field.height();
    const std::size_t n = static_cast<std::size_t>(w) * h;

    std::vector<int> seeds;
    for (std::size_t i = 0; i < n; ++i)
        if (b.data[i])
            seeds.push_back(static_cast<int>(i));
    const std::vector<double>& mask = field.mask().data();
    std::sort(seeds.begin(), seeds.end(), [&mask](int a, int c) {
        if (mask[a] != mask[c])
            return mask[a] > mask[c];
        return a < c;
    });

    std::vector<std::uint8_t> used(n, 0);
    std::vector<lsr::LineSupportRegion> regions;

    auto similarity_to = [&](const std::vector<lsr::PixelCoord>& pixels, int gx, int gy) {
        double sum_m = 0.0, re = 0.0, im = 0.0;
        for (lsr::PixelCoord p : pixels) {
            sum_m += field.mask().at(p.x, p.y);
            re += std::cos(2.0 * field.field().at(p.x, p.y));
            im += std::sin(2.0 * field.field().at(p.x, p.y));
        }
        const double norm = std::hypot(re, im);
        double rho_sq = 4.0;  // undefined mean counts as maximally dissimilar
        if (norm > 1e-12 * static_cast<double>(pixels.size())) {
            const double f2 = 2.0 * field.field().at(gx, gy);
            rho_sq = 2.0 - 2.0 * (std::cos(f2) * re / norm + std::sin(f2) * im / norm);
        }
        const double dm = field.mask().at(gx, gy) - sum_m / static_cast<double>(pixels.size());
        return rho_sq + params.alpha * dm * dm;
    };

    for (int seed : seeds) {
        if (used[seed])
            continue;
        std::vector<lsr::PixelCoord> pixels{{seed % w, seed / w}};
        used[seed] = 1;

        bool updated = true;
        while (updated) {
            updated = false;
            // N_8(R) \ P_used, restricted to foreground, in row-major order
            std::vector<int> candidates;
            for (lsr::PixelCoord p : pixels) {
                for (int dy = -1; dy <= 1; ++dy) {
                    for (int dx = -1; dx <= 1; ++dx) {
                        if (dx == 0 && dy == 0)
                            continue;
                        const int nx = p.x + dx;
                        const int ny = p.y + dy;
                        if (nx < 0 || nx >= w || ny < 0 || ny >= h)
                            continue;
                        const int idx = ny * w + nx;
                        if (b.data[idx] && !used[idx])
                            candidates.push_back(idx);
                    }
                }
            }
            std::sort(candidates.begin(), candidates.end());
            candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
            for (int idx : candidates) {
                const int gx = idx % w;
                const int gy = idx / w;
                if (similarity_to(pixels, gx, gy) < params.distance_tau) {
                    pixels.push_back({gx, gy});
                    used[idx] = 1;
                    updated = true;
                }
            }
        }

        if (pixels.size() >= params.min_region_size) {
            lsr::LineSupportRegion region;
            for (lsr::PixelCoord p : pixels) {
                region.pixels.push_back(p);
                region.sum_mask += field.mask().at(p.x, p.y);
                region.resultant_re += std::cos(2.0 * field.field().at(p.x, p.y));
                region.resultant_im += std::sin(2.0 * field.field().at(p.x, p.y));
            }
            regions.push_back(std::move(region));
        }
    }
    return regions;
}

// 8-connected component labeling by flood fill; returns sorted pixel sets
inline std::vector<std::vector<int>> connected_components_8(const lsr::ForegroundMask& b) {
    const int w = b.width;
    const int h = b.height;
    std::vector<int> label(static_cast<std::size_t>(w) * h, -1);
    std::vector<std::vector<int>> components;
    std::vector<int> stack;
    for (int start = 0; start < w * h; ++start) {
        if (!b.data[start] || label[start] >= 0)
            continue;
        const int id = static_cast<int>(components.size());
        components.emplace_back();
        stack.push_back(start);
        label[start] = id;
        while (!stack.empty()) {
            const int idx = stack.back();
            stack.pop_back();
            components[id].push_back(idx);
            const int x = idx % w;
            const int y = idx / w;
            for (int dy = -1; dy <= 1; ++dy) {
                for (int dx = -1; dx <= 1; ++dx) {
                    const int nx = x + dx;
                    const int ny = y + dy;
                    if ((dx == 0 && dy == 0) || nx < 0 || nx >= w || ny < 0 || ny >= h)
                        continue;
                    const int nidx = ny * w + nx;
                    if (b.data[nidx] && label[nidx] < 0) {
                        label[nidx] = id;
                        stack.push_back(nidx);
                    }
                }
            }
        }
        std::sort(components[id].begin(), components[id].end());
    }
    return components;
}

struct Eig2 {
    double lambda_min = 0.0;
    double lambda_max = 0.0;
    double vx = 0.0;  // unit eigenvector of lambda_min, first nonzero > 0
    double vy = 0.0;
};

// characteristic-polynomial eigendecomposition of [[a, b], [b, c]]
inline Eig2 eig2_characteristic(double a, double b, double c) {
    // lambda^2 - (a + c) lambda + (a c - b^2) = 0
    const double tr = a + c;
    const double det = a * c - b * b;
    const double disc = std::sqrt(std::max(0.0, tr * tr - 4.0 * det));
    Eig2 out;
    out.lambda_max = (tr + disc) / 2.0;
    out.lambda_min = (tr - disc) / 2.0;

    // null space of (A - lambda_min I), using the row with the larger norm
    const double r1x = a - out.lambda_min, r1y = b;
    const double r2x = b, r2y = c - out.lambda_min;
    double vx, vy;
    if (r1x * r1x + r1y * r1y >= r2x * r2x + r2y * r2y) {
        vx = r1y;
        vy = -r1x;
    } else {
        vx = r2y;
        vy = -r2x;
    }
    const double norm = std::hypot(vx, vy);
    vx /= norm;
    vy /= norm;
    if (vx < 0.0 || (vx == 0.0 && vy < 0.0)) {
        vx = -vx;
        vy = -vy;
    }
    out.vx = vx;
    out.vy = vy;
    return out;
}

struct MatchCounts {
    std::size_t matched_pred = 0;
    std::size_t total_pred = 0;
    std::size_t matched_ref = 0;
    std::size_t total_ref = 0;
};

// all-pairs pixel matching at squared tolerance tol_sq
inline MatchCounts brute_force_match(const std::vector<std::uint8_t>& pred,
                                     const std::vector<std::uint8_t>& ref, int width, int height,
                                     double tol_sq) {
    std::vector<std::pair<int, int>> pred_px, ref_px;
    for (int y = 0; y < height; ++y)
        for (int x = 0; x < width; ++x) {
            if (pred[static_cast<std::size_t>(y) * width + x])
                pred_px.emplace_back(x, y);
            if (ref[static_cast<std::size_t>(y) * width + x])
                ref_px.emplace_back(x, y);
        }
    auto matched = [tol_sq](const std::pair<int, int>& p,
                            const std::vector<std::pair<int, int>>& others) {
        for (const auto& q : others) {
            const double dx = p.first - q.first;
            const double dy = p.second - q.second;
            if (dx * dx + dy * dy <= tol_sq)
                return true;
        }
        return false;
    };
    MatchCounts counts;
    counts.total_pred = pred_px.size();
    counts.total_ref = ref_px.size();
    for (const auto& p : pred_px)
        if (matched(p, ref_px))
            ++counts.matched_pred;
    for (const auto& r : ref_px)
        if (matched(r, pred_px))
            ++counts.matched_ref;
    return counts;
}

// digital line by per-step rounding along the major axis (for cases away
// from rounding ties)
inline std::vector<std::pair<int, int>> digital_line(int x0, int y0, int x1, int y1) {
    std::vector<std::pair<int, int>> px;
    const int dx = std::abs(x1 - x0);
    const int dy = std::abs(y1 - y0);
    if (dx >= dy) {
        if (x0 > x1) {
            std::swap(x0, x1);
            std::swap(y0, y1);
        }
        const double slope = x1 == x0 ? 0.0 : static_cast<double>(y1 - y0) / (x1 - x0);
        for (int x = x0; x <= x1; ++x)
            px.emplace_back(x, static_cast<int>(std::lround(y0 + slope * (x - x0))));
    } else {
        if (y0 > y1) {
            std::swap(x0, x1);
            std::swap(y0, y1);
        }
        const double slope = static_cast<double>(x1 - x0) / (y1 - y0);
        for (int y = y0; y <= y1; ++y)
            px.emplace_back(static_cast<int>(std::lround(x0 + slope * (y - y0))), y);
    }
    return px;
}

}  // namespace oracle
