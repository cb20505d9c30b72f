#pragma once

#include <cstddef>
#include <vector>

#include "lsr/core.hpp"

namespace lsr {

// Ground-truth segment list for one image. Construction checks every
// endpoint against the pixel-center bounds [-0.5, dim - 0.5].
class AnnotationSet {
public:
    AnnotationSet(int image_width, int image_height, std::vector<LineSegment> segments);

    int image_width() const { return image_width_; }
    int image_height() const { return image_height_; }
    const std::vector<LineSegment>& segments() const { return segments_; }

private:
    int image_width_;
    int image_height_;
    std::vector<LineSegment> segments_;
};

struct EncodedGroundTruth {
    HeatmapField field;
    // Pixels covered by more than one segment; F there keeps the first
    // covering segment in annotation order.
    std::size_t overlap_pixel_count = 0;
};

// Rasterizes the annotation into a binary mask plus angle field. A pixel is
// foreground iff its center lies within thickness/2 perpendicular distance
// of some segment and projects inside the segment's extent. Background F is 0.
EncodedGroundTruth encode_ground_truth(const AnnotationSet& ann, double thickness = 1.0);

// Mean binary cross-entropy over all pixels; predicted values are clamped
// into (eps, 1 - eps) with eps = 1e-7 before the logarithm.
double mask_loss(const HeatmapField& reference, const HeatmapField& predicted);

// Mean squared angle distance over reference foreground pixels; the
// reference mask must be binary. Returns 0 when no foreground exists.
double field_loss(const HeatmapField& reference, const HeatmapField& predicted);

// mask_loss + alpha * field_loss.
double combined_loss(const HeatmapField& reference, const HeatmapField& predicted, double alpha);

}  // namespace lsr
