#pragma once

#include "lsr/core.hpp"
#include "lsr/group.hpp"

namespace lsr {

// Symmetric 2x2 second-moment matrix [[ixx, ixy], [ixy, iyy]] of a
// mass-weighted pixel set; positive semidefinite by construction.
struct InertiaTensor2 {
    double ixx = 0.0;
    double iyy = 0.0;
    double ixy = 0.0;
};

struct MinorAxis {
    double x = 0.0;
    double y = 0.0;
    // set when the tensor is isotropic and the direction fell back to +x
    bool ambiguous = false;
};

struct ExtractedSegment {
    LineSegment segment;
    bool axis_ambiguous = false;
};

// Mass-weighted centroid sum(M(p) * p) / sum(M(p)).
// Throws DegenerateRegionError when the region carries no mass.
Point center_of_mass(const LineSupportRegion& region, const HeatmapField& field);

// I = sum(M(p) * I*(p - p_mu)) with I*(x, y) = [[y^2, -xy], [-xy, x^2]].
InertiaTensor2 inertia_tensor(const LineSupportRegion& region, const HeatmapField& field,
                              Point p_mu);

// Unit eigenvector of the smaller eigenvalue, closed-form half-angle solve;
// sign canonicalized so the first nonzero component is positive. Throws
// DegenerateRegionError on the zero tensor; an isotropic tensor resolves
// toward +x with the ambiguous flag set.
MinorAxis minor_eigenvector(const InertiaTensor2& t);

// Segment through the center of mass along the minor axis, spanning the
// extreme pixel projections; confidence is the mean mask over the region.
ExtractedSegment extract_segment(const LineSupportRegion& region, const HeatmapField& field);

}  // namespace lsr
