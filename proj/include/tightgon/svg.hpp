#pragma once

#include "tightgon/polygon.hpp"

#include <string>
#include <vector>

namespace tightgon {

struct RenderSpec {
    std::vector<PolygonSpec> polygons;  // innermost first
    int canvas_size = 800;              // pixels
    double stroke_width = 1.0;          // in pixel units
    std::string stroke = "black";
};

/// Standalone SVG document: one closed polyline per polygon, innermost
/// first, viewBox scaled to the outermost circumradius times 1.05.
std::string render_svg(const RenderSpec& spec);

}  // namespace tightgon
