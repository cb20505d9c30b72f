#include "lsr/core.hpp"

#include <cmath>

namespace lsr {

ImageGrid::ImageGrid(int width, int height, double fill)
    : width_(width), height_(height) {
    if (width < 1 || height < 1)
        throw std::invalid_argument("ImageGrid: width and height must be >= 1");
    data_.assign(static_cast<std::size_t>(width) * static_cast<std::size_t>(height), fill);
}

double LevelLineAngle::normalize(double radians) {
    if (!std::isfinite(radians))
        throw std::invalid_argument("LevelLineAngle: non-finite angle");
    double a = std::fmod(radians, kPi);
    if (a < 0.0)
        a += kPi;
    // fmod/rounding can land exactly on pi; fold it back to 0.
    if (a >= kPi)
        a -= kPi;
    return a;
}

HeatmapField::HeatmapField(ImageGrid mask, ImageGrid field)
    : mask_(std::move(mask)), field_(std::move(field)) {
    if (mask_.width() != field_.width() || mask_.height() != field_.height())
        throw std::invalid_argument("HeatmapField: mask/field dimensions differ");
    for (double m : mask_.data())
        if (!(m >= 0.0 && m <= 1.0))
            throw std::invalid_argument("HeatmapField: mask value outside [0, 1]");
    for (double f : field_.data())
        if (!(f >= 0.0 && f < kPi))
            throw std::invalid_argument("HeatmapField: field angle outside [0, pi)");
}

LineSegment::LineSegment(Point p1, Point p2, double confidence)
    : p1_(p1), p2_(p2), confidence_(confidence) {
    if (p1 == p2)
        throw std::invalid_argument("LineSegment: endpoints coincide");
    if (!(confidence >= 0.0 && confidence <= 1.0))
        throw std::invalid_argument("LineSegment: confidence outside [0, 1]");
}

double LineSegment::length() const {
    return std::hypot(p2_.x - p1_.x, p2_.y - p1_.y);
}

double angle_distance(LevelLineAngle a, LevelLineAngle b) {
    return 2.0 * std::abs(std::sin(a.value() - b.value()));
}

double angle_distance_sq(LevelLineAngle a, LevelLineAngle b) {
    const double s = std::sin(a.value() - b.value());
    return 4.0 * s * s;
}

LevelLineAngle segment_level_line_angle(const LineSegment& l) {
    return LevelLineAngle(std::atan2(l.p2().y - l.p1().y, l.p2().x - l.p1().x));
}

LevelLineAngle circular_mean_angle(const std::vector<LevelLineAngle>& angles,
                                   const std::vector<double>& weights) {
    if (angles.empty())
        throw std::invalid_argument("circular_mean_angle: empty input");
    if (angles.size() != weights.size())
        throw std::invalid_argument("circular_mean_angle: angle/weight count mismatch");

    double re = 0.0, im = 0.0, total_weight = 0.0;
    for (std::size_t i = 0; i < angles.size(); ++i) {
        const double w = weights[i];
        if (w < 0.0)
            throw std::invalid_argument("circular_mean_angle: negative weight");
        total_weight += w;
        re += w * std::cos(2.0 * angles[i].value());
        im += w * std::sin(2.0 * angles[i].value());
    }
    if (total_weight <= 0.0)
        throw std::invalid_argument("circular_mean_angle: no positive weight");
    // Balanced angles cancel only up to rounding noise; anything at double
    // noise scale relative to the total weight counts as a zero resultant.
    if (std::hypot(re, im) <= 1e-12 * total_weight)
        throw UndefinedMeanError();
    return LevelLineAngle(0.5 * std::atan2(im, re));
}

}  // namespace lsr
