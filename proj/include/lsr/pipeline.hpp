#pragma once

#include <vector>

#include "lsr/config.hpp"
#include "lsr/core.hpp"
#include "lsr/frontend.hpp"

namespace lsr {

// Reconstruction back half: binarize, group, extract. Regions too thin or
// massless to define a segment are dropped.
std::vector<LineSegment> detect_from_field(const HeatmapField& field,
                                           const PipelineConfig& config);

// Full pipeline for an image: resize to the configured input side, take the
// gradient field, reconstruct, and map segments back to the original
// coordinate frame.
std::vector<LineSegment> detect_from_image(const GrayImage& img, const PipelineConfig& config);

}  // namespace lsr
