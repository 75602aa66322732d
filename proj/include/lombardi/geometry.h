#pragma once

#include <cmath>
#include <vector>

namespace lombardi {

// Tolerance for all geometric predicates, in drawing units. Constructions run
// at scales where the minimum feature size is >= 1, so this sits far below
// any legitimate gap.
inline constexpr double kEpsGeom = 1e-9;

struct Vec {
    double x = 0.0;
    double y = 0.0;
};
using Point = Vec;

inline Vec operator+(Vec a, Vec b) { return {a.x + b.x, a.y + b.y}; }
inline Vec operator-(Vec a, Vec b) { return {a.x - b.x, a.y - b.y}; }
inline Vec operator*(double s, Vec a) { return {s * a.x, s * a.y}; }
inline Vec operator*(Vec a, double s) { return {s * a.x, s * a.y}; }
inline Vec operator/(Vec a, double s) { return {a.x / s, a.y / s}; }
inline Vec operator-(Vec a) { return {-a.x, -a.y}; }

inline double dot(Vec a, Vec b) { return a.x * b.x + a.y * b.y; }
inline double cross(Vec a, Vec b) { return a.x * b.y - a.y * b.x; }
inline double norm(Vec a) { return std::hypot(a.x, a.y); }
inline double norm2(Vec a) { return a.x * a.x + a.y * a.y; }
inline Vec unit(Vec a) { return a / norm(a); }
inline Vec rot90ccw(Vec a) { return {-a.y, a.x}; }
inline Vec rot90cw(Vec a) { return {a.y, -a.x}; }
inline Vec rotate(Vec a, double ang) {
    double c = std::cos(ang), s = std::sin(ang);
    return {c * a.x - s * a.y, s * a.x + c * a.y};
}
inline Vec dir(double ang) { return {std::cos(ang), std::sin(ang)}; }
inline double angle_of(Vec a) { return std::atan2(a.y, a.x); }
inline double dist(Point a, Point b) { return norm(a - b); }

// Normalize an angle into [0, 2*pi).
double norm_angle(double a);
// Counterclockwise angle from direction a to direction b, in [0, 2*pi).
double ccw_angle(Vec a, Vec b);
// Unsigned angle between two directions, in [0, pi].
double angle_between(Vec a, Vec b);

struct Disk {
    Point center;
    double radius = 0.0;
};

// A drawing edge: straight segment (bulge == 0) or circular arc.
// bulge = tan(theta/4) with theta the subtended angle, positive when the arc
// deviates to the left of the directed chord a->b (the tangent at a is the
// chord direction rotated counterclockwise by theta/2).
struct CurveEdge {
    Point a;
    Point b;
    double bulge = 0.0;

    bool is_straight() const { return bulge == 0.0; }
};

// Circular sector of radius R and opening angle delta <= pi.
struct Wedge {
    Point apex;
    double radius = 0.0;
    double opening = 0.0;      // delta in (0, pi]
    double orientation = 0.0;  // angle of the start ray
};

// Lemma-1 closed form: radius of the largest disk inside an (R,delta)-wedge.
double inscribed_disk_radius(double R, double delta);

double chord_length(const CurveEdge& e);
// Signed curvature of the edge's supporting circle: 4*bulge/(L*(1+bulge^2)).
// Positive curvature turns clockwise along travel (left-of-chord bulge).
double curvature(const CurveEdge& e);
// Total subtended angle, 4*atan(|bulge|), in [0, 2*pi).
double sweep_angle(const CurveEdge& e);
Point arc_center(const CurveEdge& e);   // requires bulge != 0
double arc_radius(const CurveEdge& e);  // requires bulge != 0
// Point on the edge at parameter t in [0,1] (stable for shallow arcs).
Point point_at(const CurveEdge& e, double t);
// Unit velocity (direction of travel a->b) at parameter t.
Vec velocity_at(const CurveEdge& e, double t);

enum class EdgeEnd { A, B };
// Unit tangent of the a->b parameterization at the given endpoint.
Vec tangent_at(const CurveEdge& e, EdgeEnd end);
CurveEdge reversed(const CurveEdge& e);

// Departing direction of the edge seen from one of its endpoints.
Vec departure_at(const CurveEdge& e, EdgeEnd end);

struct IntersectionHit {
    Point p;
    bool grazing = false;  // within kEpsGeom of a tangential contact
};

struct IntersectOptions {
    bool exclude_shared_endpoints = false;
    double endpoint_tol = kEpsGeom;
};

// All transversal intersection points of two bounded curves.
std::vector<IntersectionHit> intersect(const CurveEdge& e1, const CurveEdge& e2,
                                       const IntersectOptions& opts = {});

// Minimal disk containing all points (Welzl, deterministic shuffle),
// certified by at most three support points on the boundary.
Disk smallest_enclosing_circle(const std::vector<Point>& pts);
Disk smallest_enclosing_circle(const std::vector<Point>& pts,
                               std::vector<Point>* support);

bool disk_disjoint(const Disk& d1, const Disk& d2, double eps = kEpsGeom);
bool point_in_disk(Point p, const Disk& d, double eps = kEpsGeom);
// Whole curve contained in the disk.
bool edge_in_disk(const CurveEdge& e, const Disk& d, double eps = kEpsGeom);
// Minimum / maximum distance from a point to the bounded curve (analytic).
double edge_point_min_dist(const CurveEdge& e, Point p);
double edge_point_max_dist(const CurveEdge& e, Point p);

// Minimum distance between two bounded curves (exact for segment pairs;
// analytic candidate points for arcs). Zero if they intersect.
double edge_edge_min_dist(const CurveEdge& e1, const CurveEdge& e2);

// ---- One-parameter family of arcs leaving p with fixed tangent t ----
//
// Members are indexed by the signed curvature k of the supporting circle
// (k > 0 turns clockwise, k = 0 is the straight ray). Implicit form
// (k/2)|x-p|^2 - (x-p).m = 0 with m = rot90cw(t), stable near k = 0.

struct FamilyHit {
    Point p;        // first intersection with the target circle
    Vec velocity;   // unit travel direction at the hit
    Vec radial;     // exact outward unit radial of the circle at the hit
    double sweep;   // travel angle from the start (0 for straight)
    double dist;    // straight-line travel distance (rays only)
};

// First intersection of the family arc (p, t, k) with circle (center,rho).
// Returns false if the arc never meets the circle.
bool family_first_hit(Point p, Vec t, double k, Point center, double rho,
                      FamilyHit* hit);

// Curvatures of the (at most two) family members tangent to the circle.
std::vector<double> family_tangency_curvatures(Point p, Vec t, Point center,
                                               double rho);

// Angle in [0, pi] between the arc's travel direction and the circle's
// counterclockwise tangent at the hit point.
double hit_angle(const FamilyHit& hit, Point center);

enum class ArcSolveStatus { Ok, Infeasible, NoConvergence };

struct ArcSolveResult {
    ArcSolveStatus status = ArcSolveStatus::Infeasible;
    CurveEdge edge;        // p -> first hit
    Point hit;             // landing point on the circle
    Vec arrival;           // unit travel direction at the hit
    double achieved_angle = 0.0;
    double residual = 0.0;
};

// The unique arc from p with tangent t whose first intersection with the
// circle makes angle alpha (in [0, pi]) with the circle tangent. Bisection on
// curvature between the two tangency extremes; residual < 1e-9 rad.
ArcSolveResult solve_arc_to_circle(Point p, Vec t, Point center, double rho,
                                   double alpha);

// The unique arc from p with tangent t at p that ends at point q.
CurveEdge arc_through_point(Point p, Vec t, Point q);

// Is x (assumed on the supporting circle/line of e) within the bounded curve?
bool on_edge_span(const CurveEdge& e, Point x, double tol = kEpsGeom);

// ---- Tangent-circle placement (used by the zone construction) ----

// A zone boundary: circle or line through `through` with tangent direction
// `tangent` there; `zone_inside` tells on which side of the supporting curve
// the zone lies (for circles: true = disk interior side).
struct TangentCurve {
    bool is_line = false;
    Point through;
    Vec tangent;
    Point center;        // circles only
    double radius = 0.0; // circles only
    bool zone_inside = false;  // circles: zone on interior side
    int zone_line_side = +1;   // lines: sign of rot90ccw(tangent) side
};

TangentCurve boundary_from_edge(const CurveEdge& e, Point at, Vec departure,
                                bool zone_on_left);

// Signed clearance of a disk of radius r centered at c from the boundary,
// measured into the zone side (>= 0 means the disk respects the boundary).
double boundary_clearance(const TangentCurve& b, Point c, double r);

// Centers of disks of radius r tangent to both boundaries on their zone
// sides. Up to two solutions (an infinite family degenerates to a canonical
// representative near the boundaries' common point).
std::vector<Point> place_disk_tangent_to_two(const TangentCurve& A,
                                             const TangentCurve& B, double r);

// Circles through p with tangent direction t there that are tangent to the
// circle (center, rho). Returned as full TangentCurve records (line case
// included when the configuration demands it).
struct SeparatorArc {
    bool is_line = false;
    Point through;   // p
    Vec tangent;     // direction at p
    Point center;
    double radius = 0.0;
    Point touch;     // tangency point with the target circle
};
std::vector<SeparatorArc> separators_through_point(Point p, Vec t,
                                                   Point center, double rho);

// Side of the separator's supporting circle/line a point falls on:
// +1 = outside (or left of line), -1 = inside (right), 0 = on it.
int separator_side(const SeparatorArc& s, Point x, double eps = kEpsGeom);

}  // namespace lombardi
