#pragma once

#include <filesystem>
#include <string>

#include "lsr/core.hpp"

namespace lsr {

// Grayscale intensities in [0, 1]; 8-bit sources are scaled by 1/255.
class GrayImage {
public:
    explicit GrayImage(ImageGrid pixels);

    const ImageGrid& pixels() const { return pixels_; }
    int width() const { return pixels_.width(); }
    int height() const { return pixels_.height(); }

private:
    ImageGrid pixels_;
};

// Gradient front-end: mask = 2x2 forward-difference gradient magnitude
// normalized by the image-wide maximum, field = level-line angle (gradient
// direction rotated by pi/2). Last row and column are edge-replicated.
HeatmapField gradient_field(const GrayImage& img);

// Bilinear resample to side x side (half-pixel center convention).
GrayImage resize_to_input(const GrayImage& img, int side);

enum class FieldIoCode {
    BadMagic,
    BadDimensions,      // zero width or height
    DimensionOverflow,  // payload size does not fit in memory limits
    Truncated,
    TrailingBytes,
    MaskOutOfRange,
    AngleOutOfRange,
    FileUnreadable,
    FileUnwritable,
};

struct FieldIoError : std::runtime_error {
    FieldIoError(FieldIoCode code, const std::string& what)
        : std::runtime_error(what), code(code) {}
    FieldIoCode code;
};

// LSDF container: "LSDF1\n", LE u32 width/height, then width*height f32 mask
// values row-major followed by the same count of f32 angles in radians.
HeatmapField load_field(const std::filesystem::path& path);
void save_field(const HeatmapField& field, const std::filesystem::path& path);

}  // namespace lsr
