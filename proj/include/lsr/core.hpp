#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace lsr {

inline constexpr double kPi = 3.14159265358979323846;

// Thrown when a circular mean is requested for angles whose doubled-angle
// resultant vanishes (perfectly balanced directions).
struct UndefinedMeanError : std::domain_error {
    UndefinedMeanError() : std::domain_error("circular mean undefined: zero resultant") {}
};

// Thrown by extraction primitives on regions with no usable mass or spread.
struct DegenerateRegionError : std::domain_error {
    explicit DegenerateRegionError(const std::string& what) : std::domain_error(what) {}
};

struct PixelCoord {
    int x = 0;
    int y = 0;

    friend bool operator==(const PixelCoord&, const PixelCoord&) = default;
};

struct Point {
    double x = 0.0;
    double y = 0.0;

    friend bool operator==(const Point&, const Point&) = default;
};

// Row-major scalar raster. Pixel (x, y) is valid iff 0 <= x < width and
// 0 <= y < height; integer pixel (x, y) sits at point (x, y).
class ImageGrid {
public:
    ImageGrid(int width, int height, double fill = 0.0);

    int width() const { return width_; }
    int height() const { return height_; }
    std::size_t size() const { return data_.size(); }

    double at(int x, int y) const { return data_[index(x, y)]; }
    double& at(int x, int y) { return data_[index(x, y)]; }

    const double* row(int y) const { return data_.data() + static_cast<std::size_t>(y) * width_; }
    double* row(int y) { return data_.data() + static_cast<std::size_t>(y) * width_; }

    const std::vector<double>& data() const { return data_; }
    std::vector<double>& data() { return data_; }

    bool contains(int x, int y) const { return x >= 0 && x < width_ && y >= 0 && y < height_; }

    std::size_t index(int x, int y) const {
        return static_cast<std::size_t>(y) * width_ + static_cast<std::size_t>(x);
    }

    friend bool operator==(const ImageGrid&, const ImageGrid&) = default;

private:
    int width_;
    int height_;
    std::vector<double> data_;
};

// Level-line orientation, an axial angle normalized into [0, pi).
class LevelLineAngle {
public:
    LevelLineAngle() = default;
    explicit LevelLineAngle(double radians) : value_(normalize(radians)) {}

    double value() const { return value_; }

    // Mod-pi reduction of any real angle into [0, pi).
    static double normalize(double radians);

private:
    double value_ = 0.0;
};

// Per-pixel line mask M paired with the level-line angle field F.
class HeatmapField {
public:
    HeatmapField(ImageGrid mask, ImageGrid field);

    const ImageGrid& mask() const { return mask_; }
    const ImageGrid& field() const { return field_; }

    int width() const { return mask_.width(); }
    int height() const { return mask_.height(); }

private:
    ImageGrid mask_;
    ImageGrid field_;
};

class LineSegment {
public:
    LineSegment(Point p1, Point p2, double confidence);

    Point p1() const { return p1_; }
    Point p2() const { return p2_; }
    double confidence() const { return confidence_; }

    double length() const;

    friend bool operator==(const LineSegment&, const LineSegment&) = default;

private:
    Point p1_;
    Point p2_;
    double confidence_;
};

// Distance between axial angles, ||z_a^2 - z_b^2|| for unit complex z with
// phases a and b; equals 2*|sin(a - b)|. Symmetric and pi-periodic.
double angle_distance(LevelLineAngle a, LevelLineAngle b);

// Squared variant used by the field loss and the grouping similarity.
double angle_distance_sq(LevelLineAngle a, LevelLineAngle b);

// Orientation of a segment reduced into [0, pi); invariant under endpoint swap.
LevelLineAngle segment_level_line_angle(const LineSegment& l);

// Weighted circular mean of axial angles, (1/2) * arg(sum w * e^{2i*theta}).
// Throws std::invalid_argument on empty input or no positive weight,
// UndefinedMeanError when the resultant vanishes.
LevelLineAngle circular_mean_angle(const std::vector<LevelLineAngle>& angles,
                                   const std::vector<double>& weights);

}  // namespace lsr
