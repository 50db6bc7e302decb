#include "tightgon/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>

namespace tightgon {

std::string render_svg(const RenderSpec& spec) {
    if (spec.canvas_size <= 0)
        throw std::domain_error("render_svg: canvas size must be positive");
    if (spec.polygons.empty())
        throw std::domain_error("render_svg: nothing to draw");

    double extent = 0.0;
    for (const auto& poly : spec.polygons)
        extent = std::max(extent, poly.center.norm() + poly.circumradius);
    const double half = 1.05 * extent;

    char buf[160];
    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    std::snprintf(buf, sizeof buf,
                  "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%d\" height=\"%d\" "
                  "viewBox=\"%.9g %.9g %.9g %.9g\">\n",
                  spec.canvas_size, spec.canvas_size, -half, -half, 2 * half, 2 * half);
    out += buf;
    // model units; y is flipped so the drawing matches mathematical orientation
    const double stroke = spec.stroke_width * 2.0 * half / spec.canvas_size;
    for (const auto& poly : spec.polygons) {
        out += "  <polygon points=\"";
        bool first = true;
        for (const auto& v : vertices(poly)) {
            std::snprintf(buf, sizeof buf, "%s%.12g,%.12g", first ? "" : " ", v.x(), -v.y());
            out += buf;
            first = false;
        }
        std::snprintf(buf, sizeof buf, "\" fill=\"none\" stroke=\"%s\" stroke-width=\"%.6g\"/>\n",
                      spec.stroke.c_str(), stroke);
        out += buf;
    }
    out += "</svg>\n";
    return out;
}

}  // namespace tightgon
