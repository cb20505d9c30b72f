#include "lsr/eval.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace lsr {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void draw_bresenham(std::vector<std::uint8_t>& raster, int width, int height, int x0, int y0,
                    int x1, int y1) {
    // canonical endpoint order keeps the raster symmetric under swap
    if (x0 > x1 || (x0 == x1 && y0 > y1)) {
        std::swap(x0, x1);
        std::swap(y0, y1);
    }
    const int dx = std::abs(x1 - x0);
    const int dy = -std::abs(y1 - y0);
    const int sx = x0 < x1 ? 1 : -1;
    const int sy = y0 < y1 ? 1 : -1;
    int err = dx + dy;
    while (true) {
        if (x0 >= 0 && x0 < width && y0 >= 0 && y0 < height)
            raster[static_cast<std::size_t>(y0) * width + x0] = 1;
        if (x0 == x1 && y0 == y1)
            break;
        const int e2 = 2 * err;
        if (e2 >= dy) {
            err += dy;
            x0 += sx;
        }
        if (e2 <= dx) {
            err += dx;
            y0 += sy;
        }
    }
}

void draw_thick(std::vector<std::uint8_t>& raster, int width, int height, const LineSegment& seg,
                double thickness) {
    const Point a{std::round(seg.p1().x), std::round(seg.p1().y)};
    const Point b{std::round(seg.p2().x), std::round(seg.p2().y)};
    if (a == b) {
        const int x = static_cast<int>(a.x), y = static_cast<int>(a.y);
        if (x >= 0 && x < width && y >= 0 && y < height)
            raster[static_cast<std::size_t>(y) * width + x] = 1;
        return;
    }
    const double dx = b.x - a.x;
    const double dy = b.y - a.y;
    const double len_sq = dx * dx + dy * dy;
    const double half = thickness / 2.0;

    const int x0 = std::max(0, static_cast<int>(std::floor(std::min(a.x, b.x) - half)));
    const int x1 = std::min(width - 1, static_cast<int>(std::ceil(std::max(a.x, b.x) + half)));
    const int y0 = std::max(0, static_cast<int>(std::floor(std::min(a.y, b.y) - half)));
    const int y1 = std::min(height - 1, static_cast<int>(std::ceil(std::max(a.y, b.y) + half)));
    for (int y = y0; y <= y1; ++y) {
        for (int x = x0; x <= x1; ++x) {
            const double px = x - a.x;
            const double py = y - a.y;
            const double t = std::clamp((px * dx + py * dy) / len_sq, 0.0, 1.0);
            const double cx = px - t * dx;
            const double cy = py - t * dy;
            if (cx * cx + cy * cy <= half * half)
                raster[static_cast<std::size_t>(y) * width + x] = 1;
        }
    }
}

int clamp_round(double v, int hi) {
    return std::clamp(static_cast<int>(std::lround(v)), 0, hi);
}

// 1D squared-distance lower envelope (Felzenszwalb-Huttenlocher)
void edt_1d(const std::vector<double>& f, std::vector<double>& d, std::vector<int>& v,
            std::vector<double>& z, int n) {
    int k = 0;
    v[0] = 0;
    z[0] = -kInf;
    z[1] = kInf;
    for (int q = 1; q < n; ++q) {
        if (f[q] == kInf)
            continue;
        if (f[v[0]] == kInf && k == 0) {
            v[0] = q;
            continue;
        }
        double s = ((f[q] + double(q) * q) - (f[v[k]] + double(v[k]) * v[k])) / (2.0 * q - 2.0 * v[k]);
        while (s <= z[k]) {
            --k;
            s = ((f[q] + double(q) * q) - (f[v[k]] + double(v[k]) * v[k])) / (2.0 * q - 2.0 * v[k]);
        }
        ++k;
        v[k] = q;
        z[k] = s;
        z[k + 1] = kInf;
    }
    k = 0;
    for (int q = 0; q < n; ++q) {
        if (f[v[0]] == kInf) {
            d[q] = kInf;
            continue;
        }
        while (z[k + 1] < q)
            ++k;
        const double dq = q - v[k];
        d[q] = dq * dq + f[v[k]];
    }
}

}  // namespace

std::vector<double> squared_distance_transform(const std::vector<std::uint8_t>& raster, int width,
                                               int height) {
    std::vector<double> dist(raster.size());
    for (std::size_t i = 0; i < raster.size(); ++i)
        dist[i] = raster[i] ? 0.0 : kInf;

    const int n = std::max(width, height);
    std::vector<double> f(n), d(n), z(static_cast<std::size_t>(n) + 1);
    std::vector<int> v(n);

    // columns first, then rows
    for (int x = 0; x < width; ++x) {
        for (int y = 0; y < height; ++y)
            f[y] = dist[static_cast<std::size_t>(y) * width + x];
        edt_1d(f, d, v, z, height);
        for (int y = 0; y < height; ++y)
            dist[static_cast<std::size_t>(y) * width + x] = d[y];
    }
    for (int y = 0; y < height; ++y) {
        for (int x = 0; x < width; ++x)
            f[x] = dist[static_cast<std::size_t>(y) * width + x];
        edt_1d(f, d, v, z, width);
        for (int x = 0; x < width; ++x)
            dist[static_cast<std::size_t>(y) * width + x] = d[x];
    }
    return dist;
}

std::vector<std::uint8_t> rasterize_segments(const std::vector<LineSegment>& segments, int width,
                                             int height, double thickness) {
    if (width < 1 || height < 1)
        throw std::invalid_argument("rasterize_segments: empty grid");
    if (!(thickness >= 1.0))
        throw std::invalid_argument("rasterize_segments: thickness must be >= 1");

    std::vector<std::uint8_t> raster(static_cast<std::size_t>(width) * height, 0);
    for (const LineSegment& seg : segments) {
        if (thickness == 1.0) {
            draw_bresenham(raster, width, height, clamp_round(seg.p1().x, width - 1),
                           clamp_round(seg.p1().y, height - 1), clamp_round(seg.p2().x, width - 1),
                           clamp_round(seg.p2().y, height - 1));
        } else {
            draw_thick(raster, width, height, seg, thickness);
        }
    }
    return raster;
}

EvalReport score(const std::vector<LineSegment>& pred, const std::vector<LineSegment>& ref,
                 int width, int height, double tolerance_fraction, double raster_thickness) {
    const std::vector<std::uint8_t> pred_raster =
        rasterize_segments(pred, width, height, raster_thickness);
    const std::vector<std::uint8_t> ref_raster =
        rasterize_segments(ref, width, height, raster_thickness);

    const double tol = tolerance_fraction * std::hypot(double(width), double(height));
    const double tol_sq = tol * tol;

    EvalReport report;
    const std::vector<double> dist_to_ref = squared_distance_transform(ref_raster, width, height);
    for (std::size_t i = 0; i < pred_raster.size(); ++i) {
        if (!pred_raster[i])
            continue;
        ++report.total_pred_pixels;
        if (dist_to_ref[i] <= tol_sq)
            ++report.matched_pred_pixels;
    }
    const std::vector<double> dist_to_pred = squared_distance_transform(pred_raster, width, height);
    for (std::size_t i = 0; i < ref_raster.size(); ++i) {
        if (!ref_raster[i])
            continue;
        ++report.total_ref_pixels;
        if (dist_to_pred[i] <= tol_sq)
            ++report.matched_ref_pixels;
    }

    if (report.total_pred_pixels > 0)
        report.precision =
            static_cast<double>(report.matched_pred_pixels) / report.total_pred_pixels;
    if (report.total_ref_pixels > 0)
        report.recall = static_cast<double>(report.matched_ref_pixels) / report.total_ref_pixels;
    if (report.precision + report.recall > 0.0)
        report.f_h =
            100.0 * 2.0 * report.precision * report.recall / (report.precision + report.recall);
    return report;
}

std::vector<std::pair<double, EvalReport>> score_with_confidence_sweep(
    const std::vector<LineSegment>& pred, const std::vector<LineSegment>& ref, int width,
    int height, const std::vector<double>& thresholds, double tolerance_fraction,
    double raster_thickness) {
    if (!std::is_sorted(thresholds.begin(), thresholds.end()))
        throw std::invalid_argument("score_with_confidence_sweep: thresholds must be ascending");

    std::vector<std::pair<double, EvalReport>> out;
    out.reserve(thresholds.size());
    for (double thr : thresholds) {
        std::vector<LineSegment> kept;
        kept.reserve(pred.size());
        for (const LineSegment& s : pred)
            if (s.confidence() >= thr)
                kept.push_back(s);
        out.emplace_back(thr, score(kept, ref, width, height, tolerance_fraction, raster_thickness));
    }
    return out;
}

}  // namespace lsr
