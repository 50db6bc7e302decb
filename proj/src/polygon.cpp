#include "tightgon/polygon.hpp"

#include <cmath>
#include <stdexcept>

namespace tightgon {

PolygonSpec::PolygonSpec(int n_, double circumradius_, double alpha_, Point2 center_)
    : n(n_), circumradius(circumradius_), alpha(alpha_), center(std::move(center_)) {
    if (n < 3)
        throw std::domain_error("PolygonSpec: side count must be >= 3");
    if (!(circumradius > 0.0) || !std::isfinite(circumradius))
        throw std::domain_error("PolygonSpec: circumradius must be positive and finite");
    if (!std::isfinite(alpha) || !center.allFinite())
        throw std::domain_error("PolygonSpec: angle and center must be finite");
}

double central_angle(int n) {
    if (n < 3)
        throw std::domain_error("central_angle: side count must be >= 3");
    return 2.0 * M_PI / n;
}

double inradius(int n, double s) {
    if (n < 3 || !(s > 0.0))
        throw std::domain_error("inradius: need n >= 3 and side length > 0");
    return s / (2.0 * std::tan(M_PI / n));
}

double circumradius(int n, double s) {
    if (n < 3 || !(s > 0.0))
        throw std::domain_error("circumradius: need n >= 3 and side length > 0");
    return s / (2.0 * std::sin(M_PI / n));
}

double apothem(const PolygonSpec& spec) {
    return spec.circumradius * std::cos(M_PI / spec.n);
}

std::vector<Point2> vertices(const PolygonSpec& spec) {
    std::vector<Point2> out;
    out.reserve(spec.n);
    for (int j = 0; j < spec.n; ++j) {
        const double a = spec.alpha + central_angle(spec.n) * j;
        out.emplace_back(spec.center + spec.circumradius * Point2(std::cos(a), std::sin(a)));
    }
    return out;
}

bool contains(const PolygonSpec& outer, const Point2& p, double tol) {
    if (tol < 0.0)
        throw std::domain_error("contains: tolerance must be non-negative");
    const double a = apothem(outer);
    const Point2 d = p - outer.center;
    for (int j = 0; j < outer.n; ++j) {
        const double phi = outer.alpha + (2 * j + 1) * M_PI / outer.n;
        if (d.x() * std::cos(phi) + d.y() * std::sin(phi) > a + tol)
            return false;
    }
    return true;
}

}  // namespace tightgon
