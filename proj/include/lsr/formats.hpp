#pragma once

#include <filesystem>
#include <vector>

#include "lsr/core.hpp"
#include "lsr/encode.hpp"
#include "lsr/eval.hpp"
#include "lsr/frontend.hpp"

namespace lsr {

// Annotation file: JSON array of [x1, y1, x2, y2] quadruples. The image
// dimensions are external to the file and validated at load.
AnnotationSet load_annotations(const std::filesystem::path& path, int image_width,
                               int image_height);
void save_annotations(const AnnotationSet& ann, const std::filesystem::path& path);

// Detection file: JSON array of [x1, y1, x2, y2, confidence] quintuples.
std::vector<LineSegment> load_segments(const std::filesystem::path& path);
void save_segments(const std::vector<LineSegment>& segments, const std::filesystem::path& path);

// 8-bit grayscale PGM (binary P5 or ASCII P2), intensities scaled by 1/255.
GrayImage load_pgm(const std::filesystem::path& path);
void save_pgm(const GrayImage& img, const std::filesystem::path& path);

struct ImageEvalReport {
    std::string id;  // file stem
    EvalReport report;
};

// Report file: per-image scores plus the micro-averaged aggregate.
void save_eval_report(const std::vector<ImageEvalReport>& images, const EvalReport& aggregate,
                      const std::filesystem::path& path);

}  // namespace lsr
