#pragma once

#include <array>
#include <vector>

#include "slicereg/quaternion.hpp"

namespace slicereg {

using Point2 = std::array<double, 2>;

/// Extreme points of the convex hull, counter-clockwise, by monotone
/// chain. Degenerate inputs collapse: empty -> empty, one point -> point,
/// collinear -> the two extreme endpoints.
std::vector<Point2> convex_hull_2d(std::vector<Point2> points);

/// Euclidean distance from a point to the hull (0 inside); handles the
/// point/segment degenerations.
double point_hull_distance(const Point2& p, const std::vector<Point2>& hull);

/// Hausdorff distance between two convex hulls given by their vertices;
/// +inf when exactly one is empty, 0 when both are.
double hull_hausdorff(const std::vector<Point2>& a, const std::vector<Point2>& b);

/// Per-slice hull: the plane is the slice C(i) in coordinates (x, y).
struct SliceHull {
    ImaginaryUnit slice;
    std::vector<Point2> vertices;
};

}  // namespace slicereg
