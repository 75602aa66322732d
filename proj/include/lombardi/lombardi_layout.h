#pragma once

#include <optional>
#include <vector>

#include "lombardi/drawing.h"
#include "lombardi/geometry.h"
#include "lombardi/tree.h"

namespace lombardi {

// Angle plan of a heavy node: the two heavy-edge tangents split the disk
// into a small and a large zone; alpha is fully determined by the degree and
// the embedding (or by a generalized per-vertex angle assignment).
struct ZonePlan {
    int node = -1;
    double alpha = 0.0;  // ccw angle from the heavy-child edge to the parent edge
    // children strictly between the heavy-child edge and the parent edge,
    // counterclockwise (the "alpha side"); the rest in ccw order on the
    // conjugate side
    std::vector<int> alpha_side;
    std::vector<int> conjugate_side;
    // slot angles (ccw from the heavy-child edge departure) per child, in the
    // order (alpha_side..., parent, conjugate_side...): filled by the planner
    std::vector<double> alpha_slots;
    std::vector<double> conjugate_slots;
    bool small_is_alpha = true;   // which side is the small zone
    bool both_small = false;      // alpha == pi on both sides
    bool extended_small = false;  // small-zone disk slid beyond the node disk
};

// Generalized-angle mode: gaps[v] lists the consecutive ccw gaps between the
// cyclic edges at v (parent first for non-root vertices), summing to 2*pi.
// Empty = perfect resolution (all gaps 2*pi/d(v)).
using AngleAssignment = std::vector<std::vector<double>>;

std::vector<ZonePlan> compute_angles(const Tree& t,
                                     const HeavyPathDecomposition& d,
                                     const AngleAssignment& angles = {});

// Skeleton of one heavy path drawn on concentric circles (Lemma-5): node
// positions, heavy-edge arcs, and the reserved stub at the head.
struct PathSkeleton {
    Point center;                 // M
    std::vector<double> circle_radius;  // C_i radius per node (index 0 = leaf, radius 0)
    std::vector<Point> pos;       // leaf-to-head order
    std::vector<CurveEdge> arcs;  // arcs[i] joins pos[i] -> pos[i+1]
    std::vector<Vec> stub;        // departure of the outgoing edge at each node
};

// Draws the path leaf-first: v1 at M with e1 tangent along init_dir; each
// arc solved to meet the next circle at angle alpha(v_{i+1})/2.
PathSkeleton draw_path_skeleton(Point M, Vec init_dir,
                                const std::vector<double>& radii,
                                const std::vector<double>& alphas);

struct PlacedChildDisk {
    int child = -1;
    Point center;
    double radius = 0.0;
};

struct ZoneFill {
    std::vector<PlacedChildDisk> disks;
    std::vector<SeparatorArc> separators;  // construction certificates
    bool extended = false;
};

// The node's annulus in its heavy-path drawing plus the placed-disk
// registry: an extended small-zone container must stay inside the annulus
// band and clear of everything already placed.
struct SmallZoneContext {
    Point path_center;        // M
    double circle_radius = 0; // rho_i (the node sits on this circle)
    double node_radius = 0;   // r_i (annulus half-width)
    CurveEdge boundary_below; // the two bounding edge curves
    CurveEdge boundary_above;
    const std::vector<Disk>* avoid = nullptr;
};

// Lemma-4 placement: a container tangent to both boundary curves, recursive
// end-splitting inside it. Boundaries A/B border the zone clockwise /
// counterclockwise; slots are ccw angles of the child edges from boundary A's
// departure direction. When the doubly-tangent container leaves the annulus
// (narrow zones), it slides circumferentially to the first feasible spot.
ZoneFill place_small_zone(Point v, const TangentCurve& A, const TangentCurve& B,
                          const std::vector<int>& children,
                          const std::vector<double>& radii,
                          const std::vector<Vec>& slot_dirs,
                          std::optional<Point> preplaced_center = std::nullopt,
                          const SmallZoneContext* ctx = nullptr);

// Large zone (opening > pi): container touching v on the bisector, split by
// separator arcs tangent to the bisector, then small-zone fills inside.
ZoneFill place_large_zone(Point v, const TangentCurve& A, const TangentCurve& B,
                          double opening, Vec bisector,
                          const std::vector<int>& children,
                          const std::vector<double>& radii,
                          const std::vector<Vec>& slot_dirs);

struct LightAttachment {
    CurveEdge edge;       // v -> u
    Point landing;        // u's final position (on C_u)
    double rotation = 0;  // applied to the child drawing about its disk center
};

// The family arc from v with the perfect-resolution tangent meeting C_u at
// angle alpha_u/2; leaves (rho_u = 0) take the unique through-center arc.
LightAttachment attach_light_edge(Point v, Vec slot_dir, Point disk_center,
                                  double rho_u, double alpha_u);

Drawing layout_lombardi(const Tree& t, bool with_disks = true,
                        const AngleAssignment& angles = {});

// Zone plans are exposed for tests.
std::vector<ZonePlan> lombardi_zone_plans(const Tree& t);

}  // namespace lombardi
