#include "lombardi/verify.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <sstream>

namespace lombardi {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kInf = std::numeric_limits<double>::infinity();

std::vector<Vec> incident_departures(const Tree& t, const Drawing& d, int v,
                                     std::vector<int>* neighbors = nullptr) {
    std::vector<Vec> dirs;
    auto add = [&](int u, const EdgeGeometry& eg, bool v_is_parent) {
        CurveEdge c = d.curve(eg);
        dirs.push_back(departure_at(c, v_is_parent ? EdgeEnd::A : EdgeEnd::B));
        if (neighbors) neighbors->push_back(u);
    };
    for (const auto& eg : d.edges) {
        if (eg.u == v) add(eg.v, eg, true);
        else if (eg.v == v) add(eg.u, eg, false);
    }
    return dirs;
}

struct Box {
    double xmin, xmax, ymin, ymax;
    bool overlaps(const Box& o) const {
        return xmin <= o.xmax && o.xmin <= xmax && ymin <= o.ymax && o.ymin <= ymax;
    }
};

Box edge_box(const CurveEdge& e) {
    Box b{std::min(e.a.x, e.b.x), std::max(e.a.x, e.b.x),
          std::min(e.a.y, e.b.y), std::max(e.a.y, e.b.y)};
    if (std::fabs(e.bulge) > 1e-7) {
        Point O = arc_center(e);
        double R = arc_radius(e);
        const Vec axes[4] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
        for (Vec ax : axes) {
            Point ext = O + R * ax;
            if (on_edge_span(e, ext)) {
                b.xmin = std::min(b.xmin, ext.x);
                b.xmax = std::max(b.xmax, ext.x);
                b.ymin = std::min(b.ymin, ext.y);
                b.ymax = std::max(b.ymax, ext.y);
            }
        }
    } else if (e.bulge != 0.0) {
        double sag = std::fabs(e.bulge) * chord_length(e) / 2;
        b.xmin -= sag; b.xmax += sag; b.ymin -= sag; b.ymax += sag;
    }
    return b;
}

}  // namespace

ResolutionResult check_resolution(const Tree& t, const Drawing& d, double eps) {
    ResolutionResult res;
    for (int v = 0; v < t.n; ++v) {
        int deg = t.degree(v);
        if (deg <= 1) continue;  // vacuous
        std::vector<Vec> dirs = incident_departures(t, d, v);
        std::vector<double> angs;
        angs.reserve(dirs.size());
        for (Vec u : dirs) angs.push_back(norm_angle(angle_of(u)));
        std::sort(angs.begin(), angs.end());
        double target = 2 * kPi / deg;
        for (size_t i = 0; i < angs.size(); ++i) {
            double gap = (i + 1 < angs.size()) ? angs[i + 1] - angs[i]
                                               : 2 * kPi - angs.back() + angs.front();
            double r = std::fabs(gap - target);
            if (r > res.max_residual) {
                res.max_residual = r;
                res.worst_vertex = v;
            }
        }
    }
    res.pass = res.max_residual <= eps;
    return res;
}

PlanarityResult check_planarity(const Tree& t, const Drawing& d,
                                bool brute_force, bool compute_clearance) {
    PlanarityResult res;
    const size_t m = d.edges.size();
    std::vector<CurveEdge> curves(m);
    std::vector<Box> boxes(m);
    for (size_t i = 0; i < m; ++i) {
        curves[i] = d.curve(d.edges[i]);
        boxes[i] = edge_box(curves[i]);
    }
    auto adjacent = [&](size_t i, size_t j) {
        const auto& a = d.edges[i];
        const auto& b = d.edges[j];
        return a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v;
    };
    auto endpoint_tol = [&](size_t i, size_t j) {
        // shared-endpoint exclusion scaled to the local feature size: floating
        // point cannot pin huge coordinates to 1e-9
        double scale = std::max({std::fabs(curves[i].a.x), std::fabs(curves[i].a.y),
                                 std::fabs(curves[j].a.x), std::fabs(curves[j].a.y),
                                 1.0});
        return std::max(kEpsGeom, 1e-12 * scale);
    };
    auto check_pair = [&](size_t i, size_t j) {
        IntersectOptions io;
        io.exclude_shared_endpoints = adjacent(i, j);
        io.endpoint_tol = endpoint_tol(i, j);
        auto hits = intersect(curves[i], curves[j], io);
        for (const auto& h : hits) {
            if (h.grazing) {
                ++res.grazing_count;
            } else {
                res.crossings.push_back({"edge-edge crossing", static_cast<int>(i),
                                         static_cast<int>(j), h.p});
            }
        }
    };

    if (brute_force || m < 64) {
        for (size_t i = 0; i < m; ++i)
            for (size_t j = i + 1; j < m; ++j)
                if (boxes[i].overlaps(boxes[j]) || brute_force) check_pair(i, j);
    } else {
        // interval sweep over xmin; candidates = bbox-overlapping pairs,
        // exactly the pairs the brute force can find intersecting
        std::vector<size_t> order(m);
        for (size_t i = 0; i < m; ++i) order[i] = i;
        std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
            return boxes[a].xmin < boxes[b].xmin;
        });
        std::vector<size_t> active;
        for (size_t oi = 0; oi < m; ++oi) {
            size_t i = order[oi];
            active.erase(std::remove_if(active.begin(), active.end(),
                                        [&](size_t j) {
                                            return boxes[j].xmax < boxes[i].xmin;
                                        }),
                         active.end());
            for (size_t j : active)
                if (boxes[i].overlaps(boxes[j])) check_pair(std::min(i, j), std::max(i, j));
            active.push_back(i);
        }
    }

    // edges passing through foreign vertices (x-sorted prefilter)
    {
        std::vector<int> vorder(t.n);
        for (int v = 0; v < t.n; ++v) vorder[v] = v;
        std::sort(vorder.begin(), vorder.end(), [&](int a, int b) {
            return d.position[a].x < d.position[b].x;
        });
        std::vector<double> vx(t.n);
        for (int i = 0; i < t.n; ++i) vx[i] = d.position[vorder[i]].x;
        for (size_t i = 0; i < m; ++i) {
            const auto& eg = d.edges[i];
            auto lo = std::lower_bound(vx.begin(), vx.end(), boxes[i].xmin - kEpsGeom);
            auto hi = std::upper_bound(vx.begin(), vx.end(), boxes[i].xmax + kEpsGeom);
            for (auto it = lo; it != hi; ++it) {
                int v = vorder[static_cast<size_t>(it - vx.begin())];
                if (v == eg.u || v == eg.v) continue;
                const Point p = d.position[v];
                if (p.y < boxes[i].ymin - kEpsGeom || p.y > boxes[i].ymax + kEpsGeom)
                    continue;
                if (edge_point_min_dist(curves[i], p) <= kEpsGeom)
                    res.crossings.push_back(
                        {"edge through vertex", static_cast<int>(i), v, p});
            }
        }
    }

    // honest minimum clearance: all non-adjacent pairs (small drawings only)
    if (compute_clearance && m >= 2 && m <= 1500) {
        res.min_clearance = kInf;
        for (size_t i = 0; i < m; ++i)
            for (size_t j = i + 1; j < m; ++j)
                if (!adjacent(i, j))
                    res.min_clearance =
                        std::min(res.min_clearance, edge_edge_min_dist(curves[i], curves[j]));
        if (res.min_clearance == kInf) res.min_clearance = -1.0;
    }
    res.pass = res.crossings.empty();
    return res;
}

bool check_embedding(const Tree& t, const Drawing& d) {
    for (int v = 0; v < t.n; ++v) {
        if (t.degree(v) <= 2) continue;  // any cyclic order matches
        std::vector<int> neighbors;
        std::vector<Vec> dirs = incident_departures(t, d, v, &neighbors);
        // expected cyclic order: (parent, c1, ..., ck)
        std::vector<int> expected;
        if (v != t.root) expected.push_back(t.parent[v]);
        for (int c : t.children[v]) expected.push_back(c);
        // measured: neighbors sorted by direction angle
        std::vector<size_t> idx(dirs.size());
        for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
        std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) {
            return norm_angle(angle_of(dirs[a])) < norm_angle(angle_of(dirs[b]));
        });
        std::vector<int> measured;
        for (size_t i : idx) measured.push_back(neighbors[i]);
        // cyclic comparison
        auto it = std::find(measured.begin(), measured.end(), expected[0]);
        if (it == measured.end()) return false;
        size_t off = static_cast<size_t>(it - measured.begin());
        for (size_t i = 0; i < measured.size(); ++i)
            if (measured[(off + i) % measured.size()] != expected[i]) return false;
    }
    return true;
}

double closest_vertex_pair(const std::vector<Point>& pts) {
    if (pts.size() < 2) return kInf;
    std::vector<Point> p = pts;
    std::sort(p.begin(), p.end(), [](Point a, Point b) {
        return a.x < b.x || (a.x == b.x && a.y < b.y);
    });
    std::multiset<std::pair<double, double>> active;  // (y, x)
    double best = kInf;
    size_t left = 0;
    for (size_t i = 0; i < p.size(); ++i) {
        double delta = std::sqrt(best);
        while (left < i && p[i].x - p[left].x > delta) {
            active.erase(active.find({p[left].y, p[left].x}));
            ++left;
        }
        auto lo = active.lower_bound({p[i].y - delta, -kInf});
        auto hi = active.upper_bound({p[i].y + delta, kInf});
        for (auto it = lo; it != hi; ++it) {
            double dx = p[i].x - it->second, dy = p[i].y - it->first;
            best = std::min(best, dx * dx + dy * dy);
        }
        active.insert({p[i].y, p[i].x});
    }
    return std::sqrt(best);
}

Disk enclosing_disk(const Drawing& d) {
    std::vector<Point> pts = d.position;
    for (const auto& eg : d.edges) {
        if (eg.bulge == 0.0) continue;
        CurveEdge c = d.curve(eg);
        for (double tt : {0.25, 0.5, 0.75}) pts.push_back(point_at(c, tt));
    }
    if (pts.empty()) return {{0, 0}, 0};
    Disk enc = smallest_enclosing_circle(pts);
    // expand to a true enclosing circle of the full curves
    double r = enc.radius;
    for (const auto& eg : d.edges) {
        CurveEdge c = d.curve(eg);
        r = std::max(r, edge_point_max_dist(c, enc.center));
    }
    enc.radius = r;
    return enc;
}

double area_ratio(const Drawing& d, AreaMetric metric) {
    if (d.position.size() < 2)
        throw std::invalid_argument("area_ratio: need at least 2 vertices");
    Disk enc = enclosing_disk(d);
    double s;
    if (metric == AreaMetric::ClosestVertices) {
        s = closest_vertex_pair(d.position);
    } else {
        s = kInf;
        for (const auto& eg : d.edges)
            s = std::min(s, chord_length(d.curve(eg)));
    }
    if (!(s > 0)) throw std::domain_error("area_ratio: degenerate (coincident vertices)");
    return kPi * enc.radius * enc.radius / (s * s);
}

BoundResult check_bound(const Tree& t, const Drawing& d, DrawingMode mode) {
    BoundResult res;
    HeavyPathDecomposition hpd = decompose(t);
    res.height = hpd.height;
    double base = mode == DrawingMode::Straight ? 8.0 : 4.0;
    res.bound = 2.0 * std::pow(base, hpd.height) * t.n;
    double nn = static_cast<double>(t.n);
    res.coarse_bound = mode == DrawingMode::Straight ? 2 * nn * nn * nn * nn
                                                     : 2 * nn * nn * nn;
    res.enclosing_radius = enclosing_disk(d).radius;
    res.margin = res.bound - res.enclosing_radius;
    res.pass = res.enclosing_radius <= res.bound * (1 + 1e-12) &&
               res.enclosing_radius <= res.coarse_bound * (1 + 1e-12);
    return res;
}

namespace {

bool check_containment(const Tree& t, const Drawing& d) {
    if (d.disks.empty()) return true;
    HeavyPathDecomposition hpd = decompose(t);
    // subtree node lists via DFS once
    std::vector<std::vector<int>> subtree(t.n);
    {
        std::vector<int> order;
        std::vector<int> stack{t.root};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            order.push_back(v);
            for (int c : t.children[v]) stack.push_back(c);
        }
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            subtree[*it].push_back(*it);
            for (int c : t.children[*it])
                subtree[*it].insert(subtree[*it].end(), subtree[c].begin(),
                                    subtree[c].end());
        }
    }
    auto tol = [](const DiskAnnotation& a) {
        return kEpsGeom + 1e-12 * a.radius;  // fp slack at large coordinates
    };
    auto node_in = [&](int v, const DiskAnnotation& a) {
        return point_in_disk(d.position[v], {a.center, a.radius}, tol(a));
    };
    std::vector<const EdgeGeometry*> edge_of_child(t.n, nullptr);
    for (const auto& eg : d.edges) edge_of_child[eg.v] = &eg;
    auto subtree_in = [&](int head, const DiskAnnotation& a) {
        for (int v : subtree[head]) {
            if (!node_in(v, a)) return false;
            if (v != head && edge_of_child[v] &&
                !edge_in_disk(d.curve(*edge_of_child[v]), {a.center, a.radius}, tol(a)))
                return false;
        }
        return true;
    };
    for (const auto& a : d.disks) {
        if (a.kind == DiskKind::Node) {
            // Lombardi small zones may legitimately extend beyond the node
            // disk along the path annulus; only straight layouts promise
            // strict node-disk containment
            if (d.mode != DrawingMode::Straight) continue;
            if (!node_in(a.node, a)) return false;
            for (int c : t.children[a.node]) {
                if (c == hpd.heavy_child[a.node]) continue;
                if (!subtree_in(c, a)) return false;
                if (!edge_in_disk(d.curve(*edge_of_child[c]), {a.center, a.radius},
                                  tol(a)))
                    return false;
            }
        } else {
            if (!subtree_in(a.node, a)) return false;
        }
    }
    return true;
}

}  // namespace

VerificationReport verify(const Tree& t, const Drawing& d,
                          const VerifyOptions& opts) {
    VerificationReport rep;
    rep.resolution = check_resolution(t, d, opts.resolution_eps);
    rep.planarity =
        check_planarity(t, d, opts.brute_force_planarity, opts.compute_clearance);
    rep.min_vertex_distance =
        t.n >= 2 ? closest_vertex_pair(d.position) : 0.0;
    rep.vertices_distinct = t.n < 2 || rep.min_vertex_distance > kEpsGeom;
    if (t.n >= 2) rep.area_ratio_value = area_ratio(d, opts.metric);
    if (d.mode != DrawingMode::External)
        rep.bound = check_bound(t, d, d.mode);
    if (opts.check_embedding_order && t.ordered && d.mode != DrawingMode::Straight)
        rep.embedding_ok = check_embedding(t, d);
    if (!d.disks.empty()) rep.containment_ok = check_containment(t, d);

    rep.pass = rep.resolution.pass && rep.planarity.pass && rep.vertices_distinct &&
               (!rep.bound || rep.bound->pass) &&
               (!rep.embedding_ok || *rep.embedding_ok) &&
               (!rep.containment_ok || *rep.containment_ok);
    return rep;
}

std::string VerificationReport::to_json() const {
    std::ostringstream o;
    o << "{\n";
    o << "  \"pass\": " << (pass ? "true" : "false") << ",\n";
    o << "  \"resolution\": {\"pass\": " << (resolution.pass ? "true" : "false")
      << ", \"max_residual\": " << resolution.max_residual
      << ", \"worst_vertex\": " << resolution.worst_vertex << "},\n";
    o << "  \"planarity\": {\"pass\": " << (planarity.pass ? "true" : "false")
      << ", \"crossings\": " << planarity.crossings.size()
      << ", \"grazing\": " << planarity.grazing_count
      << ", \"min_clearance\": " << planarity.min_clearance << "},\n";
    o << "  \"vertices_distinct\": " << (vertices_distinct ? "true" : "false")
      << ",\n";
    o << "  \"min_vertex_distance\": " << min_vertex_distance << ",\n";
    o << "  \"area_ratio\": " << area_ratio_value;
    if (bound) {
        o << ",\n  \"bound\": {\"pass\": " << (bound->pass ? "true" : "false")
          << ", \"enclosing_radius\": " << bound->enclosing_radius
          << ", \"bound\": " << bound->bound
          << ", \"coarse_bound\": " << bound->coarse_bound
          << ", \"height\": " << bound->height << "}";
    }
    if (embedding_ok)
        o << ",\n  \"embedding_ok\": " << (*embedding_ok ? "true" : "false");
    if (containment_ok)
        o << ",\n  \"containment_ok\": " << (*containment_ok ? "true" : "false");
    o << "\n}\n";
    return o.str();
}

}  // namespace lombardi
