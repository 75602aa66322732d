#include "lombardi/straight_layout.h"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <stdexcept>

namespace lombardi {

namespace {

constexpr double kPi = 3.14159265358979323846;

double normalize_pm_pi(double a) {
    a = std::fmod(a, 2 * kPi);
    if (a > kPi) a -= 2 * kPi;
    if (a <= -kPi) a += 2 * kPi;
    return a;
}

}  // namespace

double NodeDrawing::spoke_angle(int s) const {
    return anchor - s * (2 * kPi / degree);
}

NodeDrawing layout_heavy_node(int node, int degree, bool is_root,
                              const std::vector<LightChildDisk>& child_disks,
                              double r_v, bool has_heavy_out) {
    NodeDrawing nd;
    nd.node = node;
    nd.degree = degree;
    nd.is_root = is_root;
    nd.anchor = is_root ? 0.0 : kPi;
    nd.parent_spoke = is_root ? -1 : 0;
    nd.radius = r_v;
    nd.inner_radius = r_v;
    if (degree == 0) return nd;  // isolated root

    int d = degree;
    if (is_root) {
        nd.heavy_spoke = has_heavy_out ? 0 : -1;
    }
    if (!is_root && !has_heavy_out) {
        // leaf: single spoke toward the parent
        return nd;
    }

    std::vector<LightChildDisk> kids = child_disks;
    std::sort(kids.begin(), kids.end(), [](const auto& a, const auto& b) {
        return a.radius > b.radius;
    });

    if (kids.empty()) {
        if (!is_root) nd.heavy_spoke = d / 2;  // opposite (even) / ccw-closest (odd)
        return nd;
    }

    double r_max = kids.front().radius;
    double R = r_v - 2 * r_max;
    nd.inner_radius = R;

    // d(v)=3 and d(v)=4 exactly as the proof prescribes
    if (!is_root && d == 3) {
        nd.heavy_spoke = 1;
        nd.placements.push_back(
            {kids[0].child, 2, r_v - kids[0].radius, kids[0].radius, 1.0, true});
        return nd;
    }
    if (!is_root && d == 4) {
        nd.heavy_spoke = 2;
        nd.placements.push_back(
            {kids[0].child, 1, r_v - kids[0].radius, kids[0].radius, 1.0, true});
        if (kids.size() > 1)
            nd.placements.push_back(
                {kids[1].child, 3, r_v - kids[1].radius, kids[1].radius, 1.0, true});
        return nd;
    }

    double small_limit = R > 0 ? inscribed_disk_radius(R, 2 * kPi / d) : 0.0;
    size_t n_l = 0;
    while (n_l < kids.size() && kids[n_l].radius > small_limit) ++n_l;

    // large-disk count bound from the Lemma-2 proof; violation means a bug
    if (d >= 5) {
        double sd = std::sin(kPi / d);
        double bound = 1 + (1 + sd) / (4 * sd);
        if (!(static_cast<double>(n_l) < bound))
            throw std::logic_error("layout_heavy_node: large-disk bound violated");
    }

    std::vector<int> large_spokes;
    if (n_l > 0) {
        // chain of large disks on a horizontal diameter, largest leftmost
        double W = 0;
        for (size_t i = 0; i < n_l; ++i) W += 2 * kids[i].radius;
        std::vector<double> xs(n_l);
        double acc = -W / 2;
        for (size_t i = 0; i < n_l; ++i) {
            xs[i] = acc + kids[i].radius;
            acc += 2 * kids[i].radius;
        }
        // lift the centers onto the circle of radius r_v - r_max
        double rho = r_v - r_max;
        std::vector<double> phi(n_l);
        for (size_t i = 0; i < n_l; ++i)
            phi[i] = std::atan2(std::sqrt(std::max(rho * rho - xs[i] * xs[i], 0.0)),
                                xs[i]);
        // rotate so the largest disk touches the anchor ray
        double touch = nd.anchor - std::asin(r_max / rho);
        double delta = touch - phi[0];
        for (auto& a : phi) a += delta;
        // snap clockwise to consecutive available spokes
        double spoke_step = 2 * kPi / d;
        int s_prev = 0;
        for (size_t i = 0; i < n_l; ++i) {
            int s = std::max(s_prev + 1,
                             static_cast<int>(std::ceil((nd.anchor - phi[i]) / spoke_step -
                                                        1e-12)));
            if (s >= d) throw std::logic_error("layout_heavy_node: ran out of spokes");
            double rotate_by = nd.spoke_angle(s) - phi[i];
            for (size_t j = i; j < n_l; ++j) phi[j] += rotate_by;
            nd.placements.push_back(
                {kids[i].child, s, rho, kids[i].radius, 1.0, true});
            large_spokes.push_back(s);
            s_prev = s;
        }
    }

    // remaining heavy edge: opposite spoke (even), else the candidate
    // ccw-closest to the opposite direction, falling back if occupied
    if (!is_root) {
        int pref = d / 2;          // floor: angle +pi/d for odd d
        int alt = (d + 1) / 2;     // angle -pi/d for odd d
        auto used = [&](int s) {
            return std::find(large_spokes.begin(), large_spokes.end(), s) !=
                   large_spokes.end();
        };
        if (!used(pref)) {
            nd.heavy_spoke = pref;
        } else if (!used(alt)) {
            nd.heavy_spoke = alt;
        } else {
            throw std::logic_error("layout_heavy_node: no spoke for the heavy edge");
        }
    }

    // small children on the free spokes, decreasing size, starting adjacent
    // to the large-disk block
    int start = large_spokes.empty() ? 1 : large_spokes.back() + 1;
    int s = start;
    for (size_t i = n_l; i < kids.size(); ++i) {
        while (true) {
            int ss = ((s % d) + d) % d;
            bool taken = ss == nd.parent_spoke || ss == nd.heavy_spoke ||
                         std::find(large_spokes.begin(), large_spokes.end(), ss) !=
                             large_spokes.end();
            if (!taken) break;
            ++s;
        }
        int ss = ((s % d) + d) % d;
        nd.placements.push_back(
            {kids[i].child, ss, R - kids[i].radius, kids[i].radius, 1.0, false});
        ++s;
    }
    return nd;
}

PathDrawing layout_heavy_path_straight(int path_id, const std::vector<int>& nodes,
                                       std::vector<NodeDrawing> drawings,
                                       const std::vector<double>& radii) {
    PathDrawing pd;
    pd.path_id = path_id;
    pd.nodes = nodes;
    pd.node_drawings = std::move(drawings);
    pd.radii = radii;
    const size_t k = nodes.size();
    pd.poses.resize(k);
    pd.disk_radius = 0;
    for (double r : radii) pd.disk_radius += 2 * r;
    if (k == 0) return pd;

    // head at the origin; choose mirror per node to keep the chain within
    // the 2pi/3 wedge around +x
    pd.poses[0] = {0.0, false, {0, 0}};
    for (size_t i = 0; i + 1 < k; ++i) {
        const NodeDrawing& nd = pd.node_drawings[i];
        double rot = pd.poses[i].rot;
        bool mir = pd.poses[i].mirrored;
        double local_out = nd.heavy_out_dir();
        double cand1 = rot + (mir ? -local_out : local_out);
        double cand2 = rot + (mir ? local_out : -local_out);  // mirrored choice
        double g1 = normalize_pm_pi(cand1), g2 = normalize_pm_pi(cand2);
        double gamma;
        bool flip;
        if (std::fabs(g1) <= std::fabs(g2) + 1e-15) {
            gamma = g1;
            flip = false;
        } else {
            gamma = g2;
            flip = true;
        }
        if (flip) pd.poses[i].mirrored = !pd.poses[i].mirrored;
        if (std::fabs(gamma) > kPi / 3 + 1e-9)
            throw std::logic_error("layout_heavy_path_straight: left the wedge");

        // strip bisector: x = r_1 + 2*sum_{m=2..i} r_m + r_{i+1}
        double x_next = radii[0];
        for (size_t m = 1; m <= i; ++m) x_next += 2 * radii[m];
        x_next += radii[i + 1];
        Vec p = pd.poses[i].offset;
        double tstep = (x_next - p.x) / std::cos(gamma);
        if (!(tstep > 0))
            throw std::logic_error("layout_heavy_path_straight: non-monotone strip");
        Vec q = p + tstep * dir(gamma);
        // the next node's parent stub (local angle pi) maps to gamma + pi
        pd.poses[i + 1] = {gamma, false, q};
    }

    // retract/extend each edge so D_i lands in its annulus A_i
    Vec shift{0, 0};
    for (size_t i = 1; i < k; ++i) {
        double dist_i = radii[0];
        for (size_t m = 1; m < i; ++m) dist_i += 2 * radii[m];
        dist_i += radii[i];
        Vec prev = pd.poses[i - 1].offset;  // already final
        Vec cur = pd.poses[i].offset + shift;
        Vec u = unit(cur - prev);
        double B = dot(prev, u);
        double c = norm2(prev) - dist_i * dist_i;
        double s = -B + std::sqrt(std::max(B * B - c, 0.0));
        Vec fin = prev + s * u;
        shift = shift + (fin - cur);
        pd.poses[i].offset = fin;
    }
    return pd;
}

StraightLayout layout_straight_structured(const Tree& t) {
    StraightLayout L;
    L.tree = t;
    L.hpd = decompose(t);
    const auto& hpd = L.hpd;
    int h = hpd.height;
    L.paths.resize(hpd.paths.size());

    // children paths were discovered after their parents; reverse order is
    // bottom-up
    for (int pid = static_cast<int>(hpd.paths.size()) - 1; pid >= 0; --pid) {
        const auto& nodes = hpd.paths[pid];
        int j = hpd.level[nodes[0]];
        double scale_j = std::pow(8.0, h - j);
        std::vector<NodeDrawing> nds;
        std::vector<double> radii;
        for (int v : nodes) {
            std::vector<LightChildDisk> kids;
            for (int c : t.children[v]) {
                if (c == hpd.heavy_child[v]) continue;
                kids.push_back({c, 2 * (scale_j / 8.0) * hpd.subtree_size[c]});
            }
            double r_v = scale_j * hpd.light_size[v];
            bool has_heavy = hpd.heavy_child[v] >= 0;
            nds.push_back(
                layout_heavy_node(v, t.degree(v), v == t.root, kids, r_v, has_heavy));
            radii.push_back(r_v);
        }
        L.paths[pid] = layout_heavy_path_straight(pid, nodes, std::move(nds), radii);
    }
    return L;
}

Drawing StraightLayout::emit(bool with_disks) const {
    Drawing d;
    d.mode = DrawingMode::Straight;
    d.position.resize(tree.n);
    d.decomposition_height = hpd.height;

    // order edges canonically afterwards; positions first
    struct Frame {
        int pid;
        Similarity sim;
    };
    std::vector<Frame> stack{{hpd.path_of(tree.root), Similarity{}}};
    while (!stack.empty()) {
        Frame f = stack.back();
        stack.pop_back();
        const PathDrawing& pd = paths[f.pid];
        for (size_t i = 0; i < pd.nodes.size(); ++i) {
            int v = pd.nodes[i];
            Similarity node_sim = f.sim.then(
                {pd.poses[i].rot, pd.poses[i].mirrored, pd.content_scale,
                 pd.content_scale * pd.poses[i].offset});
            d.position[v] = node_sim.apply({0, 0});
            const NodeDrawing& nd = pd.node_drawings[i];
            for (const auto& pl : nd.placements) {
                double ang = nd.spoke_angle(pl.spoke);
                Similarity child_sim = node_sim.then(
                    {ang, false, pl.content_scale, pl.polar_radius * dir(ang)});
                stack.push_back({hpd.path_of(pl.child), child_sim});
            }
            if (with_disks) {
                d.disks.push_back({v, node_sim.apply({0, 0}),
                                   nd.radius * node_sim.scale, DiskKind::Node});
            }
        }
        if (with_disks) {
            d.disks.push_back({pd.nodes[0], f.sim.apply({0, 0}),
                               pd.disk_radius * f.sim.scale, DiskKind::Path});
        }
    }
    for (auto [u, v] : canonical_edges(tree)) d.edges.push_back({u, v, 0.0});
    return d;
}

void optimize_fill_outer(NodeDrawing& nd) {
    if (nd.placements.empty()) return;
    int d = nd.degree;
    std::vector<SpokePlacement> kids = nd.placements;
    std::sort(kids.begin(), kids.end(), [](const auto& a, const auto& b) {
        return a.disk_radius > b.disk_radius;
    });
    double r_v = nd.radius;
    double r_max = kids.front().disk_radius;
    double R = r_v - 2 * r_max;
    const double backoff = 1e-6;

    auto ray_dist = [&](Point c, double theta) {
        // distance from c to the ray from the origin at angle theta
        Vec u = dir(theta);
        double along = dot(c, u);
        if (along <= 0) return norm(c);
        return std::fabs(cross(u, c));
    };

    std::vector<SpokePlacement> outer;
    std::vector<int> used{nd.parent_spoke, nd.heavy_spoke};
    size_t next = 0;
    int s = 1;
    while (next < kids.size() && s < d) {
        int ss = s;
        if (std::find(used.begin(), used.end(), ss) != used.end()) {
            ++s;
            continue;
        }
        SpokePlacement cand = kids[next];
        cand.spoke = ss;
        cand.polar_radius = r_v - cand.disk_radius;
        cand.outer = true;
        Point cc = cand.polar_radius * dir(nd.spoke_angle(ss));
        bool ok = true;
        for (const auto& o : outer) {
            Point oc = o.polar_radius * dir(nd.spoke_angle(o.spoke));
            if (dist(cc, oc) < (cand.disk_radius + o.disk_radius) * (1 + backoff))
                ok = false;
        }
        // every spoke may carry an edge; require clearance from all rays
        for (int rs = 0; rs < d && ok; ++rs) {
            if (rs == ss) continue;
            if (ray_dist(cc, nd.spoke_angle(rs)) < cand.disk_radius * (1 + backoff))
                ok = false;
        }
        if (!ok) break;
        outer.push_back(cand);
        used.push_back(ss);
        ++next;
        ++s;
    }
    // the rest must be genuinely small for the inner disk
    double small_limit = R > 0 ? inscribed_disk_radius(R, 2 * kPi / d) : 0.0;
    for (size_t i = next; i < kids.size(); ++i) {
        if (kids[i].disk_radius > small_limit) return;  // keep the base placement
    }
    std::vector<SpokePlacement> result = outer;
    for (size_t i = next; i < kids.size(); ++i) {
        while (true) {
            int ss = ((s % d) + d) % d;
            if (std::find(used.begin(), used.end(), ss) == used.end()) break;
            ++s;
        }
        int ss = ((s % d) + d) % d;
        SpokePlacement pl = kids[i];
        pl.spoke = ss;
        pl.polar_radius = R - pl.disk_radius;
        pl.outer = false;
        result.push_back(pl);
        used.push_back(ss);
        ++s;
    }
    nd.inner_radius = R;
    nd.placements = std::move(result);
}

void optimize_scale_subtrees(StraightLayout& layout) {
    const double backoff = 1.0 - 1e-6;
    for (auto& pd : layout.paths) {
        for (auto& nd : pd.node_drawings) {
            int d = nd.degree;
            if (d < 3) continue;
            for (auto& pl : nd.placements) {
                if (!pl.outer) {
                    // move to the inscribed-disk position of the wedge
                    double r_fit =
                        inscribed_disk_radius(nd.inner_radius, 2 * kPi / d) * backoff;
                    if (r_fit <= pl.disk_radius) continue;
                    double grow = r_fit / pl.disk_radius;
                    pl.polar_radius = nd.inner_radius - r_fit;
                    pl.disk_radius = r_fit;
                    pl.content_scale *= grow;
                } else {
                    // grow in place within ray and neighbour clearances
                    Point c = pl.polar_radius * dir(nd.spoke_angle(pl.spoke));
                    double cap = nd.radius - pl.polar_radius;
                    for (int rs = 0; rs < d; ++rs) {
                        if (rs == pl.spoke) continue;
                        Vec u = dir(nd.spoke_angle(rs));
                        double along = dot(c, u);
                        double rd = along <= 0 ? norm(c) : std::fabs(cross(u, c));
                        cap = std::min(cap, rd);
                    }
                    for (const auto& o : nd.placements) {
                        if (o.child == pl.child) continue;
                        Point oc = o.polar_radius * dir(nd.spoke_angle(o.spoke));
                        cap = std::min(cap, dist(c, oc) - o.disk_radius);
                    }
                    cap *= backoff;
                    if (cap <= pl.disk_radius) continue;
                    pl.content_scale *= cap / pl.disk_radius;
                    pl.disk_radius = cap;
                }
            }
        }
    }
}

void optimize_expand_path(PathDrawing& pd) {
    if (pd.nodes.empty()) return;
    double extent = 0;
    for (size_t i = 0; i < pd.nodes.size(); ++i)
        extent = std::max(extent, norm(pd.poses[i].offset) + pd.node_drawings[i].radius);
    if (extent <= 0) return;
    double s = pd.disk_radius * (1.0 - 1e-9) / extent;
    if (s > 1.0) pd.content_scale *= s;
}

void optimize_all(StraightLayout& layout) {
    for (auto& pd : layout.paths)
        for (auto& nd : pd.node_drawings) optimize_fill_outer(nd);
    optimize_scale_subtrees(layout);
    for (auto& pd : layout.paths) optimize_expand_path(pd);
}

Drawing layout_straight(const Tree& t, bool optimize, bool with_disks) {
    StraightLayout L = layout_straight_structured(t);
    if (optimize) optimize_all(L);
    return L.emit(with_disks);
}

}  // namespace lombardi
