#pragma once

#include <filesystem>
#include <string>

#include "lsr/group.hpp"
#include "lsr/segment.hpp"

namespace lsr {

// Every parameter of the reconstruction pipeline in one serializable place.
struct PipelineConfig {
    int input_side = 288;  // images are resized to input_side x input_side
    SegmentationParams segmentation;
    GroupingParams grouping;
    double eval_tolerance_fraction = 0.01;  // F^H tolerance as a diagonal fraction
    double raster_thickness = 1.0;

    void validate() const;
};

// Flat INI-style text, sections [pipeline], [segmentation], [grouping].
// serialize_config(parse_config(s)) reproduces the canonical form byte for
// byte; parse accepts blank lines and '#' comments.
std::string serialize_config(const PipelineConfig& config);
PipelineConfig parse_config(const std::string& text);

PipelineConfig load_config(const std::filesystem::path& path);
void save_config(const PipelineConfig& config, const std::filesystem::path& path);

}  // namespace lsr
