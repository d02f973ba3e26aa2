#include "slicereg/hull.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace slicereg {

namespace {

double cross(const Point2& o, const Point2& a, const Point2& b) {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

double dist(const Point2& a, const Point2& b) { return std::hypot(a[0] - b[0], a[1] - b[1]); }

double point_segment_distance(const Point2& p, const Point2& a, const Point2& b) {
    const double vx = b[0] - a[0], vy = b[1] - a[1];
    const double len2 = vx * vx + vy * vy;
    if (len2 == 0.0) return dist(p, a);
    double t = ((p[0] - a[0]) * vx + (p[1] - a[1]) * vy) / len2;
    t = std::clamp(t, 0.0, 1.0);
    return dist(p, {a[0] + t * vx, a[1] + t * vy});
}

}  // namespace

std::vector<Point2> convex_hull_2d(std::vector<Point2> points) {
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    const std::size_t n = points.size();
    if (n <= 2) return points;

    std::vector<Point2> hull(2 * n);
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) {  // lower chain
        while (k >= 2 && cross(hull[k - 2], hull[k - 1], points[i]) <= 0.0) --k;
        hull[k++] = points[i];
    }
    const std::size_t lower = k + 1;
    for (std::size_t i = n - 1; i-- > 0;) {  // upper chain
        while (k >= lower && cross(hull[k - 2], hull[k - 1], points[i]) <= 0.0) --k;
        hull[k++] = points[i];
    }
    hull.resize(k - 1);  // last point repeats the first
    return hull;
}

double point_hull_distance(const Point2& p, const std::vector<Point2>& hull) {
    if (hull.empty()) return std::numeric_limits<double>::infinity();
    if (hull.size() == 1) return dist(p, hull[0]);
    if (hull.size() == 2) return point_segment_distance(p, hull[0], hull[1]);
    bool inside = true;
    double edge_min = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < hull.size(); ++i) {
        const Point2& a = hull[i];
        const Point2& b = hull[(i + 1) % hull.size()];
        if (cross(a, b, p) < 0.0) inside = false;  // vertices are CCW
        edge_min = std::min(edge_min, point_segment_distance(p, a, b));
    }
    return inside ? 0.0 : edge_min;
}

double hull_hausdorff(const std::vector<Point2>& a, const std::vector<Point2>& b) {
    if (a.empty() && b.empty()) return 0.0;
    if (a.empty() || b.empty()) return std::numeric_limits<double>::infinity();
    // For convex sets the Hausdorff distance is attained at vertices.
    double d = 0.0;
    for (const auto& p : a) d = std::max(d, point_hull_distance(p, b));
    for (const auto& p : b) d = std::max(d, point_hull_distance(p, a));
    return d;
}

}  // namespace slicereg
