#pragma once

#include <string>
#include <vector>

#include "lombardi/geometry.h"
#include "lombardi/tree.h"

namespace lombardi {

enum class DrawingMode { Straight, Lombardi, External };

struct EdgeGeometry {
    int u = -1;  // parent
    int v = -1;  // child
    double bulge = 0.0;
};

enum class DiskKind { Node, Path };

// Bounding-disk annotation: a Node disk holds a vertex and its light
// subtrees; a Path disk holds a heavy path and all its descendants.
struct DiskAnnotation {
    int node = -1;
    Point center;
    double radius = 0.0;
    DiskKind kind = DiskKind::Node;
};

struct Drawing {
    DrawingMode mode = DrawingMode::External;
    std::vector<Point> position;            // by node id
    std::vector<EdgeGeometry> edges;        // canonical order: DFS, parent first
    std::vector<DiskAnnotation> disks;      // optional
    int decomposition_height = 0;           // h(T) at layout time (meta)

    CurveEdge curve(const EdgeGeometry& e) const {
        return {position[e.u], position[e.v], e.bulge};
    }
};

// Edge list in canonical order for a tree (DFS from the root, children in
// stored order). Layouts and serialization share this order.
std::vector<std::pair<int, int>> canonical_edges(const Tree& t);

std::string mode_name(DrawingMode m);
DrawingMode mode_from_name(const std::string& s);

}  // namespace lombardi
