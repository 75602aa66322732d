#include "lombardi/geometry.h"

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <cstdio>
#include <limits>
#include <optional>
#include <stdexcept>

namespace lombardi {

namespace {

// Arcs with |bulge| below this are intersected as segments: their sagitta is
// under 5e-8 of the chord, below any clearance the constructions produce.
constexpr double kShallowBulge = 1e-7;

constexpr double kPi = 3.14159265358979323846;

double clamp1(double v) { return std::max(-1.0, std::min(1.0, v)); }

}  // namespace

double norm_angle(double a) {
    a = std::fmod(a, 2 * kPi);
    if (a < 0) a += 2 * kPi;
    return a;
}

double ccw_angle(Vec a, Vec b) {
    return norm_angle(std::atan2(cross(a, b), dot(a, b)));
}

double angle_between(Vec a, Vec b) {
    return std::acos(clamp1(dot(a, b) / (norm(a) * norm(b))));
}

double inscribed_disk_radius(double R, double delta) {
    if (!(R > 0) || !(delta > 0) || delta > kPi + 1e-15)
        throw std::domain_error("inscribed_disk_radius: need R > 0, 0 < delta <= pi");
    double s = std::sin(delta / 2);
    return R * s / (1 + s);
}

double chord_length(const CurveEdge& e) { return dist(e.a, e.b); }

double curvature(const CurveEdge& e) {
    if (e.is_straight()) return 0.0;
    double L = chord_length(e);
    return 4 * e.bulge / (L * (1 + e.bulge * e.bulge));
}

double sweep_angle(const CurveEdge& e) { return 4 * std::atan(std::fabs(e.bulge)); }

Point arc_center(const CurveEdge& e) {
    assert(!e.is_straight());
    Vec chord = e.b - e.a;
    double L = norm(chord);
    Point mid = 0.5 * (e.a + e.b);
    Vec perp = rot90ccw(chord / L);
    double d = -L * (1 - e.bulge * e.bulge) / (4 * e.bulge);
    return mid + d * perp;
}

double arc_radius(const CurveEdge& e) {
    assert(!e.is_straight());
    double L = chord_length(e);
    return L * (1 + e.bulge * e.bulge) / (4 * std::fabs(e.bulge));
}

Point point_at(const CurveEdge& e, double t) {
    if (e.is_straight()) return e.a + t * (e.b - e.a);
    // Chord frame, cancellation-free for shallow arcs: rotate the start radial
    // (-L/2, -cy) by the signed position angle, using 1-cos = 2 sin^2.
    Vec chordv = e.b - e.a;
    double L = norm(chordv);
    Vec u = chordv / L;
    Vec v = rot90ccw(u);
    double phi = 4 * std::atan(std::fabs(e.bulge)) * t;
    double sgn = e.bulge > 0 ? -1.0 : 1.0;  // bulge>0 sweeps clockwise
    double cy = -L * (1 - e.bulge * e.bulge) / (4 * e.bulge);
    double s = std::sin(phi);
    double c2 = 2 * std::sin(phi / 2) * std::sin(phi / 2);  // 1 - cos(phi)
    double X = (L / 2) * c2 + sgn * s * cy;
    double Y = sgn * s * (-L / 2) + cy * c2;
    return e.a + X * u + Y * v;
}

Vec velocity_at(const CurveEdge& e, double t) {
    Vec u = unit(e.b - e.a);
    if (e.is_straight()) return u;
    double th = 4 * std::atan(e.bulge);
    // velocity at start = chord rotated ccw by th/2, rotates by -th over travel
    return rotate(u, th / 2 - th * t);
}

Vec tangent_at(const CurveEdge& e, EdgeEnd end) {
    return velocity_at(e, end == EdgeEnd::A ? 0.0 : 1.0);
}

CurveEdge reversed(const CurveEdge& e) { return {e.b, e.a, -e.bulge}; }

Vec departure_at(const CurveEdge& e, EdgeEnd end) {
    Vec t = tangent_at(e, end);
    return end == EdgeEnd::A ? t : -t;
}

// ---------------------------------------------------------------- intersect

namespace {

// Stable power of a point w.r.t. the supporting circle of an arc:
// |p-O|^2 - R^2 without forming O or R.
double power_of_point(const CurveEdge& e, Point p) {
    Vec t = tangent_at(e, EdgeEnd::A);
    Vec m = rot90cw(t);
    double k = curvature(e);
    Vec d = p - e.a;
    // pow = |d|^2 - (2/k) d.m ; exact identity for the supporting circle
    return norm2(d) - 2.0 * dot(d, m) / k;
}

// Travel sweep (in (0,2pi]) at which the supporting circle of e passes
// through x, measured along the a->b direction of travel.
double travel_sweep(const CurveEdge& e, Point x) {
    Vec t = tangent_at(e, EdgeEnd::A);
    Vec ch = x - e.a;
    double psi = std::atan2(cross(t, ch), dot(t, ch));
    double s = (e.bulge > 0) ? norm_angle(-2 * psi) : norm_angle(2 * psi);
    return s;
}

bool arc_span_contains(const CurveEdge& e, Point x, double tol) {
    double total = sweep_angle(e);
    double R = arc_radius(e);
    double angtol = tol / std::max(R, 1e-300);
    double s = travel_sweep(e, x);
    if (s <= total + angtol) return true;
    if (s >= 2 * kPi - angtol) return true;  // numerically at the start
    return false;
}

bool seg_span_contains(const CurveEdge& e, Point x, double tol) {
    Vec d = e.b - e.a;
    double L = norm(d);
    double s = dot(x - e.a, d) / L;
    return s >= -tol && s <= L + tol;
}

bool span_contains(const CurveEdge& e, Point x, double tol, bool as_segment) {
    return as_segment ? seg_span_contains(e, x, tol) : arc_span_contains(e, x, tol);
}

void seg_seg(const CurveEdge& e1, const CurveEdge& e2,
             std::vector<IntersectionHit>& out) {
    Vec d1 = e1.b - e1.a, d2 = e2.b - e2.a;
    double L1 = norm(d1), L2 = norm(d2);
    double denom = cross(d1, d2);
    Vec w = e2.a - e1.a;
    if (std::fabs(denom) <= 1e-14 * L1 * L2) {
        // parallel; collinear overlap is a genuine violation
        if (std::fabs(cross(w, d1)) > kEpsGeom * L1) return;
        double t0 = dot(w, d1) / (L1 * L1);
        double t1 = t0 + dot(d2, d1) / (L1 * L1);
        double lo = std::max(0.0, std::min(t0, t1));
        double hi = std::min(1.0, std::max(t0, t1));
        if (hi - lo > kEpsGeom / L1) {
            out.push_back({e1.a + 0.5 * (lo + hi) * d1, false});
        } else if (hi >= lo - kEpsGeom / L1) {
            out.push_back({e1.a + 0.5 * (lo + hi) * d1, true});
        }
        return;
    }
    double t1 = cross(w, d2) / denom;
    double t2 = cross(w, d1) / denom;
    double tol1 = kEpsGeom / L1, tol2 = kEpsGeom / L2;
    if (t1 < -tol1 || t1 > 1 + tol1 || t2 < -tol2 || t2 > 1 + tol2) return;
    out.push_back({e1.a + t1 * d1, false});
}

// Segment (or shallow arc treated as segment) vs. genuine arc.
void seg_arc(const CurveEdge& seg, const CurveEdge& arc,
             std::vector<IntersectionHit>& out) {
    Vec d = unit(seg.b - seg.a);
    double L = chord_length(seg);
    double pw = power_of_point(arc, seg.a);
    // B = d.(a_seg - O_arc), computed without cancellation in 1/k where possible
    Vec t = tangent_at(arc, EdgeEnd::A);
    Vec m = rot90cw(t);
    double k = curvature(arc);
    double B = dot(d, seg.a - arc.a) - dot(d, m) / k;
    // s^2 + 2 B s + pw = 0
    double disc = B * B - pw;
    double R = arc_radius(arc);
    double disc_tol = std::max(kEpsGeom * kEpsGeom, 1e-24 * R * R);
    if (disc < -disc_tol) return;
    // penetration depth of the chord into the circle is disc/(2R); contacts
    // below the geometric tolerance are tangencies, not crossings
    bool grazing = disc < disc_tol || disc <= 2 * R * kEpsGeom;
    disc = std::max(disc, 0.0);
    double rt = std::sqrt(disc);
    double q = -(B + (B >= 0 ? rt : -rt));
    double s1 = q;
    double s2 = (q != 0) ? pw / q : -B;
    for (double s : {s1, s2}) {
        if (s < -kEpsGeom || s > L + kEpsGeom) continue;
        Point x = seg.a + s * d;
        if (!arc_span_contains(arc, x, kEpsGeom)) continue;
        bool dup = false;
        for (auto& h : out)
            if (dist(h.p, x) < 10 * kEpsGeom) dup = true;
        if (!dup) out.push_back({x, grazing});
    }
}

void arc_arc(const CurveEdge& e1, const CurveEdge& e2,
             std::vector<IntersectionHit>& out) {
    Point O1 = arc_center(e1), O2 = arc_center(e2);
    double r1 = arc_radius(e1), r2 = arc_radius(e2);
    double d = dist(O1, O2);
    double scale = std::max({r1, r2, 1.0});
    if (d <= 1e-12 * scale) {
        // concentric: equal radii means (partial) overlap
        if (std::fabs(r1 - r2) <= kEpsGeom) {
            // report overlap at a sample point of e1 inside e2's span, if any
            for (double tt : {0.25, 0.5, 0.75}) {
                Point x = point_at(e1, tt);
                if (arc_span_contains(e2, x, kEpsGeom)) {
                    out.push_back({x, false});
                    return;
                }
            }
        }
        return;
    }
    double touch_tol = std::max(kEpsGeom, 8 * std::numeric_limits<double>::epsilon() * scale);
    if (d > r1 + r2 + touch_tol) return;
    if (d < std::fabs(r1 - r2) - touch_tol) return;
    Vec ex = (O2 - O1) / d;
    Vec ey = rot90ccw(ex);
    double a = (d * d + r1 * r1 - r2 * r2) / (2 * d);
    double h2 = r1 * r1 - a * a;
    // penetration depth ~ h^2 (1/r1 + 1/r2) / 2: tangency within tolerance
    bool grazing = h2 < touch_tol * std::max(r1, 1.0) ||
                   h2 <= 2 * kEpsGeom * (r1 * r2 / (r1 + r2));
    double h = std::sqrt(std::max(h2, 0.0));
    Point base = O1 + a * ex;
    for (double sgn : {1.0, -1.0}) {
        Point x = base + sgn * h * ey;
        if (!arc_span_contains(e1, x, kEpsGeom)) continue;
        if (!arc_span_contains(e2, x, kEpsGeom)) continue;
        bool dup = false;
        for (auto& hh : out)
            if (dist(hh.p, x) < 10 * kEpsGeom) dup = true;
        if (!dup) out.push_back({x, grazing});
        if (grazing) break;
    }
}

}  // namespace

namespace {

bool same_point(Point a, Point b) { return a.x == b.x && a.y == b.y; }

// Edges sharing an endpoint exactly: the general circle-circle form loses
// the shared root to cancellation at large radii. Both circles pass through
// P, so the other intersection is P mirrored across the center line.
bool shared_endpoint_hits(const CurveEdge& f1, const CurveEdge& f2,
                          std::vector<IntersectionHit>& hits) {
    Point shared;
    int count = 0;
    for (Point p : {f1.a, f1.b})
        for (Point q : {f2.a, f2.b})
            if (same_point(p, q)) {
                shared = p;
                ++count;
            }
    if (count != 1) return false;
    bool s1 = std::fabs(f1.bulge) < kShallowBulge;
    bool s2 = std::fabs(f2.bulge) < kShallowBulge;
    if (s1 && s2) return false;  // exact segment math needs no special case

    Point other;
    bool grazing = false;
    if (s1 || s2) {
        const CurveEdge& seg = s1 ? f1 : f2;
        const CurveEdge& arc = s1 ? f2 : f1;
        Vec d = unit(seg.b - seg.a);
        Point O = arc_center(arc);
        double R = arc_radius(arc);
        double tt = 2 * dot(d, O - shared);
        other = shared + tt * d;
        if (!seg_span_contains(seg, other, kEpsGeom)) {
            hits.push_back({shared, false});
            return true;
        }
        grazing = 0.25 * tt * tt <= 2 * R * kEpsGeom;
        if (!arc_span_contains(arc, other, kEpsGeom)) {
            hits.push_back({shared, false});
            return true;
        }
    } else {
        Point O1 = arc_center(f1), O2 = arc_center(f2);
        double r1 = arc_radius(f1), r2 = arc_radius(f2);
        double d = dist(O1, O2);
        if (d < 1e-12 * std::max(r1, r2)) {
            // co-circular: an angular overlap is a genuine violation
            double t_probe = same_point(shared, f2.a) ? 0.01 : 0.99;
            Point probe = point_at(f2, t_probe);
            if (std::fabs(dist(probe, O1) - r1) < kEpsGeom * (1 + r1) &&
                arc_span_contains(f1, probe, kEpsGeom) &&
                dist(probe, shared) > 10 * kEpsGeom)
                hits.push_back({probe, false});
            hits.push_back({shared, false});
            return true;
        }
        Vec u = (O2 - O1) / d;
        Vec w = shared - O1;
        other = O1 + 2 * dot(w, u) * u - w;
        double h2 = 0.25 * norm2(other - shared);
        grazing = h2 <= 2 * kEpsGeom * (r1 * r2 / (r1 + r2));
        if (!arc_span_contains(f1, other, kEpsGeom) ||
            !arc_span_contains(f2, other, kEpsGeom)) {
            hits.push_back({shared, false});
            return true;
        }
    }
    if (dist(other, shared) < 10 * kEpsGeom) {
        hits.push_back({shared, false});
        return true;
    }
    hits.push_back({shared, false});
    hits.push_back({other, grazing});
    return true;
}

}  // namespace

std::vector<IntersectionHit> intersect(const CurveEdge& e1, const CurveEdge& e2,
                                       const IntersectOptions& opts) {
    std::vector<IntersectionHit> hits;
    // local frame anchored at e1.a: intermediate magnitudes stay at the
    // feature scale instead of the absolute coordinate scale
    const Vec anchor = e1.a;
    CurveEdge f1{e1.a - anchor, e1.b - anchor, e1.bulge};
    CurveEdge f2{e2.a - anchor, e2.b - anchor, e2.bulge};
    bool s1 = std::fabs(f1.bulge) < kShallowBulge;
    bool s2 = std::fabs(f2.bulge) < kShallowBulge;
    if (shared_endpoint_hits(f1, f2, hits)) {
        // handled by the anchored fast path
    } else if (s1 && s2) {
        seg_seg(f1, f2, hits);
    } else if (s1) {
        seg_arc(f1, f2, hits);
    } else if (s2) {
        seg_arc(f2, f1, hits);
    } else {
        arc_arc(f1, f2, hits);
    }
    for (auto& h : hits) h.p = h.p + anchor;
    if (opts.exclude_shared_endpoints) {
        std::vector<Point> shared;
        for (Point p : {e1.a, e1.b})
            for (Point q : {e2.a, e2.b})
                if (dist(p, q) <= opts.endpoint_tol) shared.push_back(p);
        hits.erase(std::remove_if(hits.begin(), hits.end(),
                                  [&](const IntersectionHit& h) {
                                      for (Point s : shared)
                                          if (dist(h.p, s) <= 100 * opts.endpoint_tol)
                                              return true;
                                      return false;
                                  }),
                   hits.end());
    }
    return hits;
}

// -------------------------------------------------- smallest enclosing circle

namespace {

uint64_t splitmix64_step(uint64_t& state) {
    state += 0x9E3779B97F4A7C15ULL;
    uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

bool in_circle(const Disk& d, Point p, double slack) {
    return dist(p, d.center) <= d.radius + slack;
}

Disk circle_2(Point a, Point b) {
    Point c = 0.5 * (a + b);
    return {c, 0.5 * dist(a, b)};
}

Disk circumcircle(Point a, Point b, Point c) {
    Vec ab = b - a, ac = c - a;
    double d = 2 * cross(ab, ac);
    if (std::fabs(d) < 1e-30) {
        // collinear: fall back to the widest pair
        Disk best = circle_2(a, b);
        for (const Disk& cand : {circle_2(a, c), circle_2(b, c)})
            if (cand.radius > best.radius) best = cand;
        return best;
    }
    double n_ab = norm2(ab), n_ac = norm2(ac);
    Vec off = {(ac.y * n_ab - ab.y * n_ac) / d, (ab.x * n_ac - ac.x * n_ab) / d};
    Point center = a + off;
    return {center, dist(center, a)};
}

}  // namespace

Disk smallest_enclosing_circle(const std::vector<Point>& pts,
                               std::vector<Point>* support) {
    if (pts.empty()) throw std::domain_error("smallest_enclosing_circle: no points");
    std::vector<Point> p = pts;
    uint64_t rng = 0x5DEECE66DULL;
    for (size_t i = p.size(); i > 1; --i)
        std::swap(p[i - 1], p[splitmix64_step(rng) % i]);

    double slack = 0.0;
    for (Point q : p) slack = std::max(slack, std::max(std::fabs(q.x), std::fabs(q.y)));
    slack = slack * 1e-13 + 1e-300;

    Disk d{p[0], 0.0};
    std::vector<Point> sup{p[0]};
    for (size_t i = 1; i < p.size(); ++i) {
        if (in_circle(d, p[i], slack)) continue;
        d = {p[i], 0.0};
        sup = {p[i]};
        for (size_t j = 0; j < i; ++j) {
            if (in_circle(d, p[j], slack)) continue;
            d = circle_2(p[i], p[j]);
            sup = {p[i], p[j]};
            for (size_t k = 0; k < j; ++k) {
                if (in_circle(d, p[k], slack)) continue;
                d = circumcircle(p[i], p[j], p[k]);
                sup = {p[i], p[j], p[k]};
            }
        }
    }
    if (support) *support = sup;
    return d;
}

Disk smallest_enclosing_circle(const std::vector<Point>& pts) {
    return smallest_enclosing_circle(pts, nullptr);
}

// ------------------------------------------------------------- predicates

bool disk_disjoint(const Disk& d1, const Disk& d2, double eps) {
    return dist(d1.center, d2.center) >= d1.radius + d2.radius - eps;
}

bool point_in_disk(Point p, const Disk& d, double eps) {
    return dist(p, d.center) <= d.radius + eps;
}

double edge_point_min_dist(const CurveEdge& e, Point p) {
    if (std::fabs(e.bulge) < kShallowBulge) {
        Vec d = e.b - e.a;
        double t = dot(p - e.a, d) / norm2(d);
        t = std::max(0.0, std::min(1.0, t));
        return dist(p, e.a + t * d);
    }
    Point O = arc_center(e);
    double R = arc_radius(e);
    double best = std::min(dist(p, e.a), dist(p, e.b));
    double dc = dist(p, O);
    if (dc > 1e-300) {
        Point x = O + (R / dc) * (p - O);
        if (arc_span_contains(e, x, kEpsGeom)) best = std::min(best, std::fabs(dc - R));
    }
    return best;
}

double edge_point_max_dist(const CurveEdge& e, Point p) {
    if (std::fabs(e.bulge) < kShallowBulge)
        return std::max(dist(p, e.a), dist(p, e.b));
    Point O = arc_center(e);
    double R = arc_radius(e);
    double best = std::max(dist(p, e.a), dist(p, e.b));
    double dc = dist(p, O);
    if (dc > 1e-300) {
        Point x = O - (R / dc) * (p - O);
        if (arc_span_contains(e, x, kEpsGeom)) best = std::max(best, dc + R);
    }
    return best;
}

bool edge_in_disk(const CurveEdge& e, const Disk& d, double eps) {
    return edge_point_max_dist(e, d.center) <= d.radius + eps;
}

double edge_edge_min_dist(const CurveEdge& e1, const CurveEdge& e2) {
    if (!intersect(e1, e2).empty()) return 0.0;
    bool s1 = std::fabs(e1.bulge) < kShallowBulge;
    bool s2 = std::fabs(e2.bulge) < kShallowBulge;
    double best = std::min(std::min(edge_point_min_dist(e2, e1.a),
                                    edge_point_min_dist(e2, e1.b)),
                           std::min(edge_point_min_dist(e1, e2.a),
                                    edge_point_min_dist(e1, e2.b)));
    if (s1 && s2) return best;  // disjoint segments: endpoint candidates suffice
    // arc pairs: closest interior approach lies along the center line
    if (!s1 && !s2) {
        Point O1 = arc_center(e1), O2 = arc_center(e2);
        double r1 = arc_radius(e1), r2 = arc_radius(e2);
        double d = dist(O1, O2);
        if (d > 1e-300) {
            Vec ex = (O2 - O1) / d;
            Point c1 = O1 + r1 * ex, c1i = O1 - r1 * ex;
            Point c2 = O2 - r2 * ex, c2i = O2 + r2 * ex;
            for (Point c : {c1, c1i})
                if (on_edge_span(e1, c)) best = std::min(best, edge_point_min_dist(e2, c));
            for (Point c : {c2, c2i})
                if (on_edge_span(e2, c)) best = std::min(best, edge_point_min_dist(e1, c));
        }
    } else {
        // segment vs arc: foot of the arc center on the segment line
        const CurveEdge& seg = s1 ? e1 : e2;
        const CurveEdge& arc = s1 ? e2 : e1;
        Point O = arc_center(arc);
        Vec d = seg.b - seg.a;
        double t = dot(O - seg.a, d) / norm2(d);
        if (t >= 0 && t <= 1) {
            Point foot = seg.a + t * d;
            best = std::min(best, edge_point_min_dist(arc, foot));
        }
    }
    return best;
}

// -------------------------------------------------------------- arc family

bool family_first_hit(Point p, Vec t, double k, Point center, double rho,
                      FamilyHit* hit) {
    Vec m = rot90cw(t);
    Vec w = center - p;
    double A = 0.5 * k * (norm2(w) + rho * rho) - dot(w, m);
    double B = k * rho * w.x - rho * m.x;
    double C = k * rho * w.y - rho * m.y;
    double Rbc = std::hypot(B, C);
    if (Rbc == 0 || std::fabs(A) > Rbc) return false;
    double phi = std::atan2(C, B);
    double dlt = std::acos(clamp1(-A / Rbc));
    bool found = false;
    FamilyHit best{};
    double best_key = 0;
    for (double th : {phi + dlt, phi - dlt}) {
        // all chord math relative to p: absolute coordinates never mix with
        // the local feature scale
        Vec radial = dir(th);
        Vec ch = w + rho * radial;  // x - p, exactly local
        double psi = std::atan2(cross(t, ch), dot(t, ch));
        double key;  // travel ordering within the family member
        Vec vel;
        double sweep, distance;
        if (k > 0) {
            sweep = norm_angle(-2 * psi);
            if (sweep < 1e-14) sweep = 2 * kPi;
            vel = rotate(t, -sweep);
            distance = (2.0 / k) * std::sin(sweep / 2);
            key = sweep;
        } else if (k < 0) {
            sweep = norm_angle(2 * psi);
            if (sweep < 1e-14) sweep = 2 * kPi;
            vel = rotate(t, sweep);
            distance = (-2.0 / k) * std::sin(sweep / 2);
            key = sweep;
        } else {
            double dd = dot(ch, t);
            if (dd <= 1e-12 * std::max(1.0, rho)) continue;  // behind the ray
            sweep = 0.0;
            vel = t;
            distance = dd;
            key = dd;
        }
        if (!found || key < best_key) {
            best = {p + ch, vel, radial, sweep, distance};
            best_key = key;
            found = true;
        }
    }
    if (!found) return false;
    *hit = best;
    return true;
}

std::vector<double> family_tangency_curvatures(Point p, Vec t, Point center,
                                               double rho) {
    Vec n = rot90ccw(t);
    Vec w = p - center;
    double A = norm2(w) - rho * rho;
    std::vector<double> ks;
    for (double denom : {2 * (rho - dot(w, n)), 2 * (-rho - dot(w, n))}) {
        if (std::fabs(denom) < 1e-300) continue;
        double s = A / denom;
        if (s == 0) continue;
        ks.push_back(-1.0 / s);  // center at p + s*rot90ccw(t) => curvature -1/s
    }
    std::sort(ks.begin(), ks.end());
    return ks;
}

double hit_angle(const FamilyHit& hit, Point center) {
    (void)center;  // the exact radial is carried with the hit
    Vec t_c = rot90ccw(hit.radial);
    return std::acos(clamp1(dot(hit.velocity, t_c)));
}

ArcSolveResult solve_arc_to_circle(Point p, Vec t, Point center, double rho,
                                   double alpha) {
    ArcSolveResult res;
    t = unit(t);
    double off = std::fabs(dist(p, center) - rho);
    if (off <= 1e-12 * std::max(rho, 1.0)) {
        res.status = ArcSolveStatus::Infeasible;  // p must be off the circle
        return res;
    }
    auto eval = [&](double k, FamilyHit* h) -> bool {
        return family_first_hit(p, t, k, center, rho, h);
    };
    auto finish = [&](double k, const FamilyHit& h) {
        res.status = ArcSolveStatus::Ok;
        double b = 0.0;
        if (k > 0)
            b = std::tan(h.sweep / 4);
        else if (k < 0)
            b = -std::tan(h.sweep / 4);
        res.edge = {p, h.p, b};
        res.hit = h.p;
        res.arrival = h.velocity;
        res.achieved_angle = hit_angle(h, center);
        res.residual = std::fabs(res.achieved_angle - alpha);
    };

    // Straight ray first: keeps exactly-aligned configurations exact and
    // avoids the degenerate near/far ordering of almost-radial arcs, whose
    // two crossings both satisfy the target.
    FamilyHit h0;
    if (eval(0.0, &h0) && std::fabs(hit_angle(h0, center) - alpha) < 1e-9) {
        finish(0.0, h0);
        return res;
    }

    std::vector<double> ks = family_tangency_curvatures(p, t, center, rho);
    if (ks.size() < 2) {
        std::fprintf(stderr, "[solve] ks=%zu p=(%.9g,%.9g) t=(%.9g,%.9g) c=(%.9g,%.9g) rho=%.9g alpha=%.9g\n",
            ks.size(), p.x, p.y, t.x, t.y, center.x, center.y, rho, alpha);
        res.status = ArcSolveStatus::Infeasible;
        return res;
    }
    double span = ks[1] - ks[0];
    // the exact tangency grazes within fp noise; back off until it evaluates
    double lo = 0, hi = 0;
    FamilyHit hlo, hhi;
    bool ok_lo = false, ok_hi = false;
    for (double nudge = 1e-13; nudge < 1e-3; nudge *= 100) {
        if (!ok_lo) {
            lo = ks[0] + span * nudge;
            ok_lo = eval(lo, &hlo);
        }
        if (!ok_hi) {
            hi = ks[1] - span * nudge;
            ok_hi = eval(hi, &hhi);
        }
        if (ok_lo && ok_hi) break;
    }
    if (!ok_lo || !ok_hi) {
        res.status = ArcSolveStatus::Infeasible;
        return res;
    }
    double flo = hit_angle(hlo, center);
    double fhi = hit_angle(hhi, center);
    if ((flo - alpha) * (fhi - alpha) > 0) {
        if (std::fabs(flo - alpha) >= 1e-9 && std::fabs(fhi - alpha) >= 1e-9)
            std::fprintf(stderr, "[solve] bracket flo=%.9g fhi=%.9g alpha=%.9g p=(%.9g,%.9g) t=(%.12g,%.12g) c=(%.9g,%.9g) rho=%.9g ks=%.9g,%.9g\n",
                flo, fhi, alpha, p.x, p.y, t.x, t.y, center.x, center.y, rho, ks[0], ks[1]);
        // target angle outside what this bracket reaches: clamp to nearest end
        // only if within solver tolerance, otherwise infeasible
        if (std::fabs(flo - alpha) < 1e-9) {
            finish(lo, hlo);
            return res;
        }
        if (std::fabs(fhi - alpha) < 1e-9) {
            finish(hi, hhi);
            return res;
        }
        res.status = ArcSolveStatus::Infeasible;
        return res;
    }
    double k = lo;
    FamilyHit h = hlo;
    for (int it = 0; it < 200; ++it) {
        k = 0.5 * (lo + hi);
        if (!eval(k, &h)) {
            std::fprintf(stderr, "[solve] mid-eval MISS k=%.17g lo=%.17g hi=%.17g ks=[%.17g,%.17g]\n",
                k, lo, hi, ks[0], ks[1]);
            res.status = ArcSolveStatus::NoConvergence;
            return res;
        }
        double f = hit_angle(h, center);
        if (std::fabs(f - alpha) < 1e-12) break;
        if ((flo - alpha) * (f - alpha) <= 0) {
            hi = k;
        } else {
            lo = k;
            flo = f;
        }
    }
    finish(k, h);
    if (res.residual >= 1e-9) {
        std::fprintf(stderr,
            "[solve] NOCONV resid=%.6g k=%.17g alpha=%.17g achieved=%.17g "
            "p=(%.9g,%.9g) c=(%.9g,%.9g) rho=%.9g dist(p,c)=%.9g sweep=%.6g\n",
            res.residual, k, alpha, res.achieved_angle, p.x, p.y, center.x,
            center.y, rho, dist(p, center), h.sweep);
        res.status = ArcSolveStatus::NoConvergence;
    }
    return res;
}

CurveEdge arc_through_point(Point p, Vec t, Point q) {
    t = unit(t);
    Vec u = q - p;
    double L = norm(u);
    double psi = std::atan2(cross(t, u), dot(t, u));
    if (std::fabs(psi) < 1e-13) return {p, q, 0.0};
    Vec n = rot90ccw(t);
    double s = norm2(u) / (2 * dot(n, u));
    double k = -1.0 / s;
    double sweep = (k > 0) ? norm_angle(-2 * psi) : norm_angle(2 * psi);
    double b = (k > 0 ? 1.0 : -1.0) * std::tan(sweep / 4);
    (void)L;
    return {p, q, b};
}

bool on_edge_span(const CurveEdge& e, Point x, double tol) {
    if (std::fabs(e.bulge) < kShallowBulge) return seg_span_contains(e, x, tol);
    return arc_span_contains(e, x, tol);
}

// ------------------------------------------------- tangent-circle placement

TangentCurve boundary_from_edge(const CurveEdge& e, Point at, Vec departure,
                                bool zone_on_left) {
    TangentCurve b;
    b.through = at;
    b.tangent = unit(departure);
    if (std::fabs(e.bulge) < kShallowBulge) {
        b.is_line = true;
        b.zone_line_side = zone_on_left ? +1 : -1;
        return b;
    }
    b.is_line = false;
    b.center = arc_center(e);
    b.radius = arc_radius(e);
    double center_side = cross(b.tangent, b.center - at);  // >0: center left of tangent
    b.zone_inside = zone_on_left ? (center_side > 0) : (center_side < 0);
    return b;
}

double boundary_clearance(const TangentCurve& b, Point c, double r) {
    if (b.is_line) {
        Vec n = rot90ccw(b.tangent);
        double sd = b.zone_line_side * dot(n, c - b.through);
        return sd - r;
    }
    double d = dist(c, b.center);
    if (b.zone_inside) return (b.radius - d) - r;
    return (d - b.radius) - r;
}

namespace {

// |c - O| = target for a disk of radius r against a circular boundary.
double tangency_target(const TangentCurve& b, double r) {
    return b.zone_inside ? b.radius - r : b.radius + r;
}

std::vector<Point> circle_circle_points(Point O1, double r1, Point O2, double r2) {
    std::vector<Point> out;
    double d = dist(O1, O2);
    if (d < 1e-300) return out;
    double a = (d * d + r1 * r1 - r2 * r2) / (2 * d);
    double h2 = r1 * r1 - a * a;
    double scale = std::max({r1, r2, 1.0});
    if (h2 < -1e-9 * scale * scale) return out;
    double h = std::sqrt(std::max(h2, 0.0));
    Vec ex = (O2 - O1) / d;
    Vec ey = rot90ccw(ex);
    Point base = O1 + a * ex;
    out.push_back(base + h * ey);
    if (h > 1e-12 * scale) out.push_back(base - h * ey);
    return out;
}

}  // namespace

std::vector<Point> place_disk_tangent_to_two(const TangentCurve& A,
                                             const TangentCurve& B, double r) {
    std::vector<Point> out;
    if (A.is_line && B.is_line) {
        Vec nA = rot90ccw(A.tangent) * double(A.zone_line_side);
        Vec nB = rot90ccw(B.tangent) * double(B.zone_line_side);
        double denom = cross(A.tangent, B.tangent);
        if (std::fabs(denom) < 1e-12) {
            // parallel boundary lines: canonical representative at the corner
            Point c0 = A.through + r * nA;
            double sdB = dot(nB, c0 - B.through) - r;
            if (std::fabs(sdB) < 1e-6 * std::max(1.0, r)) out.push_back(c0);
            return out;
        }
        // c = A.through + r nA + s t_A ; require nB.(c - B.through) = r
        double s = (r - dot(nB, A.through + r * nA - B.through)) / dot(nB, A.tangent);
        out.push_back(A.through + r * nA + s * A.tangent);
        return out;
    }
    if (A.is_line || B.is_line) {
        const TangentCurve& Ln = A.is_line ? A : B;
        const TangentCurve& Ci = A.is_line ? B : A;
        Vec n = rot90ccw(Ln.tangent) * double(Ln.zone_line_side);
        Point base = Ln.through + r * n;     // offset line through base, dir t
        double target = tangency_target(Ci, r);
        if (target < 0) return out;
        // |base + s t - O| = target
        Vec w = base - Ci.center;
        double bq = dot(w, Ln.tangent);
        double cq = norm2(w) - target * target;
        double disc = bq * bq - cq;
        // mutually tangent boundaries make the offsets tangent as well; the
        // boundary circle passes through the apex only to solver precision,
        // so the degenerate root needs a scale-aware acceptance band
        double tol = 1e-9 * (target * target + norm2(w) + 1.0);
        if (disc < -tol) return out;
        disc = std::max(disc, 0.0);
        double rt = std::sqrt(disc);
        out.push_back(base + (-bq + rt) * Ln.tangent);
        if (rt > 1e-12 * std::max(target, 1.0))
            out.push_back(base + (-bq - rt) * Ln.tangent);
        return out;
    }
    double ta = tangency_target(A, r), tb = tangency_target(B, r);
    if (ta < 0 || tb < 0) return out;
    out = circle_circle_points(A.center, ta, B.center, tb);

    // Boundary radii far above the disk scale wreck the absolute-form
    // conditioning (error ~ eps R^2 / r). Newton-polish in a form anchored at
    // the common through-point: F_i(u) = u.nu_i - (|u|^2/(2R_i)) - s_i with
    // u = c - v, s_i = r_sign - r^2/(2R_i) signed by the zone side.
    double Rmax = std::max(A.radius, B.radius);
    if (Rmax < 1e5 * std::max(r, 1e-300)) return out;
    Point v = A.through;
    auto row = [&](const TangentCurve& bnd, Vec& nu, double& invR, double& s) {
        if (bnd.is_line) {
            nu = rot90ccw(bnd.tangent) * double(bnd.zone_line_side);
            invR = 0.0;
            s = r;
            return;
        }
        // |u - R nu|^2 = (R -+ r)^2 expands to u.nu - |u|^2/(2R) = +-r - r^2/(2R)
        Vec toc = bnd.center - v;
        double R = norm(toc);
        nu = toc / R;
        invR = 1.0 / R;
        s = (bnd.zone_inside ? r : -r) - 0.5 * r * r / R;
    };
    Vec nu1, nu2;
    double iR1, iR2, s1, s2;
    row(A, nu1, iR1, s1);
    row(B, nu2, iR2, s2);

    auto newton = [&](Vec u) -> std::optional<Vec> {
        for (int it = 0; it < 60; ++it) {
            double q1 = 0.5 * iR1 * norm2(u), q2 = 0.5 * iR2 * norm2(u);
            double f1 = dot(u, nu1) - q1 - s1;
            double f2 = dot(u, nu2) - q2 - s2;
            Vec g1 = nu1 - iR1 * u, g2 = nu2 - iR2 * u;
            double det = cross(g1, g2);
            if (std::fabs(det) < 1e-14) return std::nullopt;
            // solve J du = -f
            Vec du{(-f1 * g2.y + f2 * g1.y) / det, (-f2 * g1.x + f1 * g2.x) / det};
            u = u + du;
            if (norm(du) < 1e-14 * (norm(u) + r)) {
                return u;
            }
        }
        return std::nullopt;
    };
    // seeds: the absolute-form candidates, else the linearized corner
    std::vector<Vec> seeds;
    for (Point c : out) seeds.push_back(c - v);
    if (seeds.empty()) {
        double det = cross(nu1, nu2);
        if (std::fabs(det) > 1e-9) {
            seeds.push_back({(s1 * nu2.y - s2 * nu1.y) / det,
                             (s2 * nu1.x - s1 * nu2.x) / det});
        }
    }
    std::vector<Point> polished;
    for (Vec u0 : seeds) {
        auto u = newton(u0);
        if (!u) continue;
        Point c = v + *u;
        bool dup = false;
        for (Point o : polished)
            if (dist(o, c) < 1e-9 * (r + 1)) dup = true;
        if (!dup) polished.push_back(c);
    }
    if (!polished.empty()) return polished;
    return out;
}

std::vector<SeparatorArc> separators_through_point(Point p, Vec t, Point center,
                                                   double rho) {
    std::vector<SeparatorArc> out;
    t = unit(t);
    Vec n = rot90ccw(t);
    Vec w = p - center;
    double A = norm2(w) - rho * rho;
    double scale = norm(w) + rho + 1.0;
    double denoms[2] = {2 * (rho - dot(w, n)), 2 * (-rho - dot(w, n))};
    for (double denom : denoms) {
        SeparatorArc s;
        s.through = p;
        s.tangent = t;
        // near-degenerate members are lines; huge circles would wreck the
        // conditioning of every downstream tangency solve
        if (std::fabs(denom) < 1e-12 * std::max(1.0, std::fabs(A)) ||
            std::fabs(A / denom) > 1e7 * scale) {
            double lateral = std::fabs(dot(n, center - p));
            if (std::fabs(lateral - rho) < 1e-6 * scale) {
                bool dup = false;
                for (auto& o : out) dup = dup || o.is_line;
                if (!dup) {
                    s.is_line = true;
                    s.touch = p + dot(t, center - p) * t;
                    out.push_back(s);
                }
            }
            continue;
        }
        double sv = A / denom;
        if (sv == 0) continue;
        s.is_line = false;
        s.center = p + sv * n;
        s.radius = std::fabs(sv);
        if (rho == 0.0) {
            s.touch = center;
        } else {
            s.touch = s.center + s.radius * unit(center - s.center);
        }
        bool dup = false;
        for (auto& o : out)
            if (!o.is_line && dist(o.center, s.center) < 1e-12 * (1 + s.radius)) dup = true;
        if (!dup) out.push_back(s);
    }
    return out;
}

int separator_side(const SeparatorArc& s, Point x, double eps) {
    if (s.is_line) {
        double sd = dot(rot90ccw(s.tangent), x - s.through);
        if (sd > eps) return +1;
        if (sd < -eps) return -1;
        return 0;
    }
    double d = dist(x, s.center) - s.radius;
    if (d > eps) return +1;
    if (d < -eps) return -1;
    return 0;
}

}  // namespace lombardi
