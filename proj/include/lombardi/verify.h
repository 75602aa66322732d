#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lombardi/drawing.h"
#include "lombardi/geometry.h"
#include "lombardi/tree.h"

namespace lombardi {

enum class AreaMetric { ClosestVertices, ShortestEdge };

struct VerifyOptions {
    double resolution_eps = 1e-9;
    AreaMetric metric = AreaMetric::ClosestVertices;
    bool brute_force_planarity = false;  // O(m^2) reference oracle
    bool check_embedding_order = true;   // ordered trees, non-straight modes
    bool compute_clearance = true;       // min pairwise clearance (report only)
};

struct Violation {
    std::string what;
    int a = -1;  // node or edge-child id, context dependent
    int b = -1;
    Point where;
};

struct ResolutionResult {
    bool pass = true;
    double max_residual = 0.0;  // max |gap - 2pi/d(v)| over all vertices
    int worst_vertex = -1;
};

struct PlanarityResult {
    bool pass = true;
    std::vector<Violation> crossings;  // transversal, non-excluded
    int grazing_count = 0;             // tangential contacts (not crossings)
    double min_clearance = -1.0;       // over inspected non-adjacent pairs
};

struct BoundResult {
    bool pass = true;
    double enclosing_radius = 0.0;
    double bound = 0.0;         // 2 * base^h * n
    double coarse_bound = 0.0;  // 2n^4 (straight) / 2n^3 (lombardi)
    double margin = 0.0;
    int height = 0;
};

struct VerificationReport {
    bool pass = false;
    ResolutionResult resolution;
    PlanarityResult planarity;
    std::optional<bool> embedding_ok;
    std::optional<BoundResult> bound;
    std::optional<bool> containment_ok;
    bool vertices_distinct = true;
    double min_vertex_distance = 0.0;
    double area_ratio_value = 0.0;  // per the chosen metric
    std::string to_json() const;
};

// Sorted tangent gaps at every vertex versus 2*pi/d(v).
ResolutionResult check_resolution(const Tree& t, const Drawing& d,
                                  double eps = 1e-9);

// All transversal crossings between edge pairs, plus edge-through-vertex
// incidences. Accelerated by an interval sweep over bounding boxes;
// brute_force runs the O(m^2) reference pair loop.
PlanarityResult check_planarity(const Tree& t, const Drawing& d,
                                bool brute_force = false,
                                bool compute_clearance = true);

// Counterclockwise cyclic order of edge tangents at each vertex equals
// (parent edge, child_1, ..., child_k).
bool check_embedding(const Tree& t, const Drawing& d);

// pi * R_enc^2 / s^2 with s the closest vertex pair (default) or the
// shortest edge chord.
double area_ratio(const Drawing& d, AreaMetric metric);

// R_enc <= 2 * 8^h * n (straight) or 2 * 4^h * n (lombardi); the coarse
// 2n^4 / 2n^3 bounds are asserted alongside.
BoundResult check_bound(const Tree& t, const Drawing& d, DrawingMode mode);

// True enclosing circle of the drawing (vertices and full arc extents).
Disk enclosing_disk(const Drawing& d);

double closest_vertex_pair(const std::vector<Point>& pts);

VerificationReport verify(const Tree& t, const Drawing& d,
                          const VerifyOptions& opts = {});

}  // namespace lombardi
