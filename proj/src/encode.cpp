#include "lsr/encode.hpp"

#include <algorithm>
#include <cmath>

namespace lsr {

namespace {

bool inside_extended_bounds(Point p, int width, int height) {
    return p.x >= -0.5 && p.x <= width - 0.5 && p.y >= -0.5 && p.y <= height - 0.5;
}

}  // namespace

AnnotationSet::AnnotationSet(int image_width, int image_height, std::vector<LineSegment> segments)
    : image_width_(image_width), image_height_(image_height), segments_(std::move(segments)) {
    if (image_width < 1 || image_height < 1)
        throw std::invalid_argument("AnnotationSet: image dimensions must be >= 1");
    for (const LineSegment& s : segments_) {
        if (!inside_extended_bounds(s.p1(), image_width, image_height) ||
            !inside_extended_bounds(s.p2(), image_width, image_height))
            throw std::invalid_argument("AnnotationSet: segment endpoint outside image bounds");
    }
}

EncodedGroundTruth encode_ground_truth(const AnnotationSet& ann, double thickness) {
    if (!(thickness >= 1.0))
        throw std::invalid_argument("encode_ground_truth: thickness must be >= 1");

    const int w = ann.image_width();
    const int h = ann.image_height();
    ImageGrid mask(w, h, 0.0);
    ImageGrid field(w, h, 0.0);
    std::size_t overlaps = 0;

    const double half = thickness / 2.0;
    for (const LineSegment& seg : ann.segments()) {
        const Point a = seg.p1();
        const Point b = seg.p2();
        const double dx = b.x - a.x;
        const double dy = b.y - a.y;
        const double len_sq = dx * dx + dy * dy;
        const double angle = segment_level_line_angle(seg).value();

        const int x0 = std::max(0, static_cast<int>(std::floor(std::min(a.x, b.x) - half)));
        const int x1 = std::min(w - 1, static_cast<int>(std::ceil(std::max(a.x, b.x) + half)));
        const int y0 = std::max(0, static_cast<int>(std::floor(std::min(a.y, b.y) - half)));
        const int y1 = std::min(h - 1, static_cast<int>(std::ceil(std::max(a.y, b.y) + half)));

        for (int y = y0; y <= y1; ++y) {
            for (int x = x0; x <= x1; ++x) {
                const double px = x - a.x;
                const double py = y - a.y;
                const double t = (px * dx + py * dy) / len_sq;
                if (t < 0.0 || t > 1.0)
                    continue;
                const double cx = px - t * dx;
                const double cy = py - t * dy;
                if (cx * cx + cy * cy > half * half)
                    continue;
                if (mask.at(x, y) == 1.0) {
                    ++overlaps;  // first covering segment keeps F
                } else {
                    mask.at(x, y) = 1.0;
                    field.at(x, y) = angle;
                }
            }
        }
    }
    return EncodedGroundTruth{HeatmapField(std::move(mask), std::move(field)), overlaps};
}

namespace {

void require_same_dims(const HeatmapField& a, const HeatmapField& b, const char* op) {
    if (a.width() != b.width() || a.height() != b.height())
        throw std::invalid_argument(std::string(op) + ": dimension mismatch");
}

}  // namespace

double mask_loss(const HeatmapField& reference, const HeatmapField& predicted) {
    require_same_dims(reference, predicted, "mask_loss");
    constexpr double kEps = 1e-7;

    const std::vector<double>& t = reference.mask().data();
    const std::vector<double>& p = predicted.mask().data();
    double total = 0.0;
    for (std::size_t i = 0; i < t.size(); ++i) {
        const double q = std::clamp(p[i], kEps, 1.0 - kEps);
        total -= t[i] * std::log(q) + (1.0 - t[i]) * std::log(1.0 - q);
    }
    return total / static_cast<double>(t.size());
}

double field_loss(const HeatmapField& reference, const HeatmapField& predicted) {
    require_same_dims(reference, predicted, "field_loss");

    const std::vector<double>& m = reference.mask().data();
    const std::vector<double>& ft = reference.field().data();
    const std::vector<double>& fp = predicted.field().data();

    double total = 0.0;
    std::size_t foreground = 0;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0.0)
            continue;
        if (m[i] != 1.0)
            throw std::invalid_argument("field_loss: reference mask is not binary");
        const double s = std::sin(ft[i] - fp[i]);
        total += 4.0 * s * s;
        ++foreground;
    }
    if (foreground == 0)
        return 0.0;  // an image with no lines contributes no field error
    return total / static_cast<double>(foreground);
}

double combined_loss(const HeatmapField& reference, const HeatmapField& predicted, double alpha) {
    if (!(alpha >= 0.0))
        throw std::invalid_argument("combined_loss: alpha must be >= 0");
    return mask_loss(reference, predicted) + alpha * field_loss(reference, predicted);
}

}  // namespace lsr
