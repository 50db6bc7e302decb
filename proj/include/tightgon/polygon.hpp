#pragma once

#include <Eigen/Dense>

#include <vector>

namespace tightgon {

using Point2 = Eigen::Vector2d;

/// A regular polygon: `n` vertices on a circle of radius `circumradius`
/// around `center`, vertex 0 at angle `alpha`, counter-clockwise.
struct PolygonSpec {
    int n;
    double circumradius;
    double alpha = 0.0;
    Point2 center = Point2::Zero();

    PolygonSpec(int n_, double circumradius_, double alpha_ = 0.0,
                Point2 center_ = Point2::Zero());
};

/// Central angle 2*pi/n subtended by one edge.
double central_angle(int n);

/// Distance from the center to an edge midpoint, side length s.
double inradius(int n, double s);

/// Distance from the center to a vertex, side length s.
double circumradius(int n, double s);

/// Inradius of a spec'd polygon (circumradius * cos(pi/n)).
double apothem(const PolygonSpec& spec);

/// Vertices in counter-clockwise order starting at angle alpha.
std::vector<Point2> vertices(const PolygonSpec& spec);

/// Half-plane test against every edge, inclusive within tol (a distance).
bool contains(const PolygonSpec& outer, const Point2& p, double tol);

}  // namespace tightgon
