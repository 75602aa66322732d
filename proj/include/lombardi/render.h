#pragma once

#include <string>

#include "lombardi/drawing.h"
#include "lombardi/tree.h"

namespace lombardi {

struct SvgOptions {
    bool show_disks = false;  // Figure-2 style layer: heavy nodes gray,
                              // light children white, heavy edges bold
    double stroke_width_scale = 1.0;
};

// Deterministic SVG 1.1 output; one path per edge, one circle per vertex;
// viewBox = enclosing disk plus a 5% margin.
std::string to_svg(const Tree& t, const Drawing& d, const SvgOptions& opts = {});

// Lossless interchange JSON; floats carry 17 significant digits. The edge
// array is in canonical order and, together with meta.root and
// meta.ordered, reconstructs the tree and its embedding.
std::string to_json(const Tree& t, const Drawing& d);

struct LoadedDrawing {
    Tree tree;
    Drawing drawing;
};
LoadedDrawing from_json(const std::string& text);

}  // namespace lombardi
