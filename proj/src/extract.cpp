#include "lsr/extract.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace lsr {

Point center_of_mass(const LineSupportRegion& region, const HeatmapField& field) {
    if (region.pixels.empty())
        throw std::invalid_argument("center_of_mass: empty region");
    double mass = 0.0, mx = 0.0, my = 0.0;
    for (PixelCoord p : region.pixels) {
        const double m = field.mask().at(p.x, p.y);
        mass += m;
        mx += m * p.x;
        my += m * p.y;
    }
    if (mass <= 0.0)
        throw DegenerateRegionError("center_of_mass: region carries no mass");
    return Point{mx / mass, my / mass};
}

InertiaTensor2 inertia_tensor(const LineSupportRegion& region, const HeatmapField& field,
                              Point p_mu) {
    InertiaTensor2 t;
    for (PixelCoord p : region.pixels) {
        const double m = field.mask().at(p.x, p.y);
        const double dx = p.x - p_mu.x;
        const double dy = p.y - p_mu.y;
        t.ixx += m * dy * dy;
        t.iyy += m * dx * dx;
        t.ixy -= m * dx * dy;
    }
    return t;
}

MinorAxis minor_eigenvector(const InertiaTensor2& t) {
    const double a = t.ixx;
    const double b = t.ixy;
    const double c = t.iyy;
    const double scale = std::max({std::abs(a), std::abs(b), std::abs(c)});
    if (scale == 0.0)
        throw DegenerateRegionError("minor_eigenvector: zero tensor");

    // eigenvalue gap is 2 * sqrt(((a - c) / 2)^2 + b^2); isotropic when the
    // gap vanishes relative to the tensor scale
    const double half_gap = std::hypot((a - c) / 2.0, b);
    if (half_gap <= 1e-12 * scale)
        return MinorAxis{1.0, 0.0, true};

    // the major eigenvector sits at angle 0.5 * atan2(2b, a - c); the minor
    // axis is orthogonal to it
    const double theta_major = 0.5 * std::atan2(2.0 * b, a - c);
    double x = -std::sin(theta_major);
    double y = std::cos(theta_major);
    if (x < 0.0 || (x == 0.0 && y < 0.0)) {
        x = -x;
        y = -y;
    }
    return MinorAxis{x + 0.0, y + 0.0, false};  // flush -0.0
}

ExtractedSegment extract_segment(const LineSupportRegion& region, const HeatmapField& field) {
    if (region.pixels.size() < 2)
        throw DegenerateRegionError("extract_segment: region needs at least two pixels");

    const Point mu = center_of_mass(region, field);
    const MinorAxis axis = minor_eigenvector(inertia_tensor(region, field, mu));

    double t_min = std::numeric_limits<double>::infinity();
    double t_max = -std::numeric_limits<double>::infinity();
    for (PixelCoord p : region.pixels) {
        const double t = (p.x - mu.x) * axis.x + (p.y - mu.y) * axis.y;
        t_min = std::min(t_min, t);
        t_max = std::max(t_max, t);
    }
    if (t_max <= t_min)
        throw DegenerateRegionError("extract_segment: region has no extent along the minor axis");

    const Point p1{mu.x + t_min * axis.x, mu.y + t_min * axis.y};
    const Point p2{mu.x + t_max * axis.x, mu.y + t_max * axis.y};
    return ExtractedSegment{LineSegment(p1, p2, region.mean_mask()), axis.ambiguous};
}

}  // namespace lsr
