#include "lsr/pipeline.hpp"

#include <algorithm>
#include <cmath>

#include "lsr/extract.hpp"
#include "lsr/group.hpp"
#include "lsr/segment.hpp"

namespace lsr {

std::vector<LineSegment> detect_from_field(const HeatmapField& field,
                                           const PipelineConfig& config) {
    config.validate();
    const ForegroundMask fg = combined_foreground(field, config.segmentation);
    const std::vector<LineSupportRegion> regions = grow_regions(field, fg, config.grouping);

    std::vector<LineSegment> segments;
    segments.reserve(regions.size());
    // projection feet can overhang the outermost pixel centers slightly;
    // keep endpoints inside the half-pixel-extended image box
    auto clamp_point = [&](Point p) {
        return Point{std::clamp(p.x, -0.5, field.width() - 0.5),
                     std::clamp(p.y, -0.5, field.height() - 0.5)};
    };
    for (const LineSupportRegion& region : regions) {
        try {
            const LineSegment raw = extract_segment(region, field).segment;
            const Point p1 = clamp_point(raw.p1());
            const Point p2 = clamp_point(raw.p2());
            if (p1 == p2)
                continue;
            segments.emplace_back(p1, p2, raw.confidence());
        } catch (const DegenerateRegionError&) {
            // single-pixel or massless region, nothing to report
        }
    }
    return segments;
}

std::vector<LineSegment> detect_from_image(const GrayImage& img, const PipelineConfig& config) {
    config.validate();
    const GrayImage resized = resize_to_input(img, config.input_side);
    const HeatmapField field = gradient_field(resized);
    std::vector<LineSegment> segments = detect_from_field(field, config);
    if (img.width() == config.input_side && img.height() == config.input_side)
        return segments;

    // map back through the half-pixel resize transform
    const double sx = static_cast<double>(img.width()) / config.input_side;
    const double sy = static_cast<double>(img.height()) / config.input_side;
    auto map_back = [&](Point p) {
        return Point{std::clamp((p.x + 0.5) * sx - 0.5, -0.5, img.width() - 0.5),
                     std::clamp((p.y + 0.5) * sy - 0.5, -0.5, img.height() - 0.5)};
    };
    std::vector<LineSegment> mapped;
    mapped.reserve(segments.size());
    for (const LineSegment& s : segments) {
        const Point p1 = map_back(s.p1());
        const Point p2 = map_back(s.p2());
        if (p1 == p2)
            continue;  // collapsed by extreme downscale
        mapped.emplace_back(p1, p2, s.confidence());
    }
    return mapped;
}

}  // namespace lsr
