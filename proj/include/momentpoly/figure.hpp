#pragma once

#include <string>
#include <vector>

#include "momentpoly/geometry.hpp"
#include "momentpoly/linalg.hpp"

namespace momentpoly {

enum class EdgeStyle { Solid, Dashed };

struct FigurePolytope {
    Polytope shape;
    EdgeStyle style = EdgeStyle::Solid;
};

struct FigureMarker {
    Vec at;
    std::string label;  // empty draws the dot alone
};

// Everything is exact data; rounding happens once, at render time. All
// referenced geometry must share one ambient dimension.
struct FigureSpec {
    std::vector<FigurePolytope> polytopes;  // drawn in order, base first
    std::vector<FigureMarker> markers;      // filled circles (fixed point images)
    std::vector<Vec> wall_normals;          // each draws the line <normal,x>=0
    bool axis_frame = true;
    int width = 480;
    int height = 480;
};

// SVG 1.1 text, byte deterministic for fixed input: stable element order and
// six-decimal coordinates. Ambient 2 renders as is; ambient 3 projects through
// the fixed orthonormal pair u1=(1,-1,0)/sqrt(2), u2=(1,1,-2)/sqrt(6), the
// sum-zero plane chart. Anything else, a mixed-ambient figure, a rank 3
// polytope, or a figure with no geometry at all throws InvalidInput.
std::string render_figure(const FigureSpec& fig);

void save_figure(const FigureSpec& fig, const std::string& path);

} // namespace momentpoly
