#include "lsr/segment.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace lsr {

std::size_t ForegroundMask::count() const {
    return static_cast<std::size_t>(std::count(data.begin(), data.end(), std::uint8_t(1)));
}

void SegmentationParams::validate() const {
    if (!(global_tau >= 0.0 && global_tau <= 1.0))
        throw std::invalid_argument("SegmentationParams: global_tau must be in [0, 1]");
    if (!std::isfinite(local_theta))
        throw std::invalid_argument("SegmentationParams: local_theta must be finite");
    if (window_radius < 1)
        throw std::invalid_argument("SegmentationParams: window_radius must be >= 1");
    if (!(gaussian_sigma > 0.0))
        throw std::invalid_argument("SegmentationParams: gaussian_sigma must be > 0");
}

std::vector<double> gaussian_kernel(int radius, double sigma) {
    if (radius < 1)
        throw std::invalid_argument("gaussian_kernel: radius must be >= 1");
    if (!(sigma > 0.0))
        throw std::invalid_argument("gaussian_kernel: sigma must be > 0");
    std::vector<double> taps(static_cast<std::size_t>(2 * radius + 1));
    for (int d = -radius; d <= radius; ++d)
        taps[d + radius] = std::exp(-0.5 * (d / sigma) * (d / sigma));
    const double sum = std::accumulate(taps.begin(), taps.end(), 0.0);
    for (double& t : taps)
        t /= sum;
    return taps;
}

ForegroundMask global_threshold(const ImageGrid& m, double tau) {
    ForegroundMask out(m.width(), m.height());
    const std::vector<double>& v = m.data();
    for (std::size_t i = 0; i < v.size(); ++i)
        out.data[i] = v[i] > tau ? 1 : 0;
    return out;
}

ForegroundMask local_threshold(const ImageGrid& m, const SegmentationParams& params) {
    params.validate();
    const int w = m.width();
    const int h = m.height();
    const int r = params.window_radius;
    const std::vector<double> taps = gaussian_kernel(r, params.gaussian_sigma);

    // separable Gaussian mean with replicate-edge padding
    ImageGrid horiz(w, h, 0.0);
    for (int y = 0; y < h; ++y) {
        const double* src = m.row(y);
        double* dst = horiz.row(y);
        for (int x = 0; x < w; ++x) {
            double acc = 0.0;
            for (int d = -r; d <= r; ++d)
                acc += taps[d + r] * src[std::clamp(x + d, 0, w - 1)];
            dst[x] = acc;
        }
    }

    ForegroundMask out(w, h);
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            double mean = 0.0;
            for (int d = -r; d <= r; ++d)
                mean += taps[d + r] * horiz.at(x, std::clamp(y + d, 0, h - 1));
            out.at(x, y) = m.at(x, y) > mean - params.local_theta ? 1 : 0;
        }
    }
    return out;
}

ForegroundMask combined_foreground(const HeatmapField& field, const SegmentationParams& params) {
    params.validate();
    ForegroundMask global = global_threshold(field.mask(), params.global_tau);
    ForegroundMask local = local_threshold(field.mask(), params);
    ForegroundMask out(field.width(), field.height());
    for (std::size_t i = 0; i < out.data.size(); ++i)
        out.data[i] = global.data[i] & local.data[i];
    return out;
}

}  // namespace lsr
