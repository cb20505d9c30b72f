#pragma once

#include <cstdint>
#include <vector>

#include "lsr/core.hpp"

namespace lsr {

// Binary per-pixel foreground map, same dimensions as its source field.
struct ForegroundMask {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> data;  // row-major, values 0/1

    ForegroundMask(int w, int h) : width(w), height(h), data(static_cast<std::size_t>(w) * h, 0) {}

    std::uint8_t at(int x, int y) const { return data[static_cast<std::size_t>(y) * width + x]; }
    std::uint8_t& at(int x, int y) { return data[static_cast<std::size_t>(y) * width + x]; }
    std::size_t count() const;
};

struct SegmentationParams {
    double global_tau = 0.2;    // global threshold on M
    double local_theta = 0.05;  // slack below the local Gaussian mean
    int window_radius = 10;     // half-extent of the averaging window
    double gaussian_sigma = 5.0;

    void validate() const;
};

// output(p) = 1 iff M(p) > tau (strict).
ForegroundMask global_threshold(const ImageGrid& m, double tau);

// output(p) = 1 iff M(p) > Gaussian-weighted window mean around p - theta.
// The window is clamped to the image by edge replication.
ForegroundMask local_threshold(const ImageGrid& m, const SegmentationParams& params);

// Pixel-wise AND of the global and local masks.
ForegroundMask combined_foreground(const HeatmapField& field, const SegmentationParams& params);

// Normalized 1D Gaussian taps for radius/sigma; the separable product of two
// of these is the window weight W_p and sums to 1.
std::vector<double> gaussian_kernel(int radius, double sigma);

}  // namespace lsr
