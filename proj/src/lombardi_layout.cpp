#include "lombardi/lombardi_layout.h"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <cstdio>
#include <map>
#include <stdexcept>

namespace lombardi {

namespace {

constexpr double kPi = 3.14159265358979323846;

std::vector<double> uniform_gaps(int d) {
    return std::vector<double>(static_cast<size_t>(d), 2 * kPi / d);
}

}  // namespace

std::vector<ZonePlan> compute_angles(const Tree& t,
                                     const HeavyPathDecomposition& hpd,
                                     const AngleAssignment& angles) {
    std::vector<ZonePlan> plans(t.n);
    for (int v = 0; v < t.n; ++v) {
        if (hpd.heavy_child[v] < 0) continue;  // leaves carry no plan
        int d = t.degree(v);
        std::vector<double> gaps =
            angles.empty() || angles[v].empty() ? uniform_gaps(d) : angles[v];
        if (static_cast<int>(gaps.size()) != d)
            throw std::invalid_argument("compute_angles: gap count != degree");
        double sum = 0;
        for (double g : gaps) {
            if (!(g > 0)) throw std::invalid_argument("compute_angles: gap <= 0");
            sum += g;
        }
        if (std::fabs(sum - 2 * kPi) > 1e-9)
            throw std::invalid_argument("compute_angles: gaps must sum to 2*pi");

        ZonePlan& p = plans[v];
        p.node = v;
        const auto& kids = t.children[v];
        int m = static_cast<int>(kids.size());
        int tt = 0;
        while (kids[tt] != hpd.heavy_child[v]) ++tt;

        if (v == t.root) {
            // single wrap-around zone; cyclic order = (c_1..c_m), gaps[i]
            // between child i and child i+1
            p.alpha = 2 * kPi;
            double cum = 0;
            for (int s = 1; s < m; ++s) {
                int idx = (tt + s) % m;
                cum += gaps[(tt + s - 1) % m];
                p.alpha_side.push_back(kids[idx]);
                p.alpha_slots.push_back(cum);
            }
            p.small_is_alpha = false;  // treated as one large zone
        } else {
            // cyclic order = (parent, c_1, ..., c_m); gaps[0] = parent -> c_1
            // alpha side: ccw from the heavy-child edge to the parent edge
            double cum = 0;
            for (int s = tt + 1; s < m; ++s) {
                cum += gaps[s];  // gap between c_s and c_{s+1} is gaps[s]...
                p.alpha_side.push_back(kids[s]);
                p.alpha_slots.push_back(cum);
            }
            // total alpha: continue to the parent edge (wrap gap m)
            double alpha = 0;
            for (int i = tt + 1; i <= m; ++i) alpha += gaps[i % (m + 1)];
            p.alpha = alpha;
            // conjugate side: ccw from the parent edge toward the heavy child
            double cum2 = 0;
            for (int s = 1; s < tt + 1; ++s) {
                cum2 += gaps[s - 1];
                p.conjugate_side.push_back(kids[s - 1]);
                p.conjugate_slots.push_back(cum2);
            }
            p.both_small = std::fabs(alpha - kPi) < 1e-12;
            p.small_is_alpha = alpha <= 2 * kPi - alpha + 1e-15;
        }
    }
    return plans;
}

PathSkeleton draw_path_skeleton(Point M, Vec init_dir,
                                const std::vector<double>& radii,
                                const std::vector<double>& alphas) {
    const size_t k = radii.size();
    PathSkeleton sk;
    sk.center = M;
    sk.pos.resize(k);
    sk.stub.resize(k);
    sk.circle_radius.assign(k, 0.0);
    sk.pos[0] = M;
    sk.stub[0] = unit(init_dir);
    if (k == 1) return sk;
    double acc = radii[0];
    for (size_t i = 1; i < k; ++i) {
        sk.circle_radius[i] = acc + radii[i];
        acc += 2 * radii[i];
    }
    for (size_t i = 0; i + 1 < k; ++i) {
        auto res = solve_arc_to_circle(sk.pos[i], sk.stub[i], M,
                                       sk.circle_radius[i + 1], alphas[i + 1] / 2);
        if (res.status != ArcSolveStatus::Ok)
            throw std::logic_error("draw_path_skeleton: arc solver failed");
        sk.arcs.push_back(res.edge);
        sk.pos[i + 1] = res.hit;
        sk.stub[i + 1] = rotate(-res.arrival, alphas[i + 1]);
    }
    return sk;
}

namespace {

// ---- Lemma-4 recursive packing --------------------------------------------

struct PackItem {
    double radius = 0.0;
    Vec sep_dir;   // tangent at v of the separator used when this item is an end
    int payload = -1;  // index into the caller's item list
};

struct PackResult {
    std::vector<Point> centers;  // by item order
    std::vector<SeparatorArc> separators;
};

// required side of the REMAINING content relative to a separator through v
// with tangent dirv: +1 = remaining counterclockwise (left) of dirv
int required_side_of(const SeparatorArc& s, Vec dirv, Point v, int leftish) {
    if (s.is_line) return leftish;  // separator_side: +1 = left of tangent
    double center_side = cross(dirv, s.center - v);  // >0: center on the left
    // near v the left-of-dirv region is inside the circle iff the center is left
    bool left_is_inside = center_side > 0;
    if (leftish > 0) return left_is_inside ? -1 : +1;
    return left_is_inside ? +1 : -1;
}

PackResult lemma4_pack(Point v, Point container_center, double container_radius,
                       std::vector<PackItem> items) {
    PackResult out;
    out.centers.assign(items.size(), Point{});
    size_t lo = 0, hi = items.size();  // active range [lo, hi)
    Point c = container_center;
    double r = container_radius;
    while (hi - lo > 1) {
        bool left = items[lo].radius <= items[hi - 1].radius;
        size_t endi = left ? lo : hi - 1;
        double r1 = items[endi].radius;
        double rr = r - r1;       // remaining container
        double rhat = r - 2 * r1; // locus of the tangency point
        Vec sd = items[endi].sep_dir;

        auto seps = separators_through_point(v, sd, c, std::max(rhat, 0.0));
        // diameter directions to test, one per separator candidate
        bool placed = false;
        for (const auto& s : seps) {
            Vec e;
            if (rhat > 1e-12 * r) {
                e = unit(s.touch - c);
            } else {
                // degenerate locus: tangency point at the container center
                Vec tangent_at_c = s.is_line ? s.tangent
                                             : rot90ccw(unit(c - s.center));
                e = rot90ccw(tangent_at_c);
            }
            for (int flip = 0; flip < (rhat > 1e-12 * r ? 1 : 2); ++flip) {
                if (flip) e = -e;
                Point x_end = c + (r - r1) * e;
                Point x_rest = c - r1 * e;
                int need = required_side_of(s, sd, v, left ? +1 : -1);
                if (separator_side(s, x_rest, 1e-12 * (1 + r)) == need &&
                    separator_side(s, x_end, 1e-12 * (1 + r)) == -need) {
                    out.centers[endi] = x_end;
                    out.separators.push_back(s);
                    c = x_rest;
                    r = rr;
                    placed = true;
                    break;
                }
            }
            if (placed) break;
        }
        if (!placed)
            throw std::logic_error("lemma4_pack: no separator orientation fits");
        if (left) ++lo;
        else --hi;
    }
    if (hi - lo == 1) out.centers[lo] = c;
    return out;
}

}  // namespace

ZoneFill place_small_zone(Point v, const TangentCurve& A, const TangentCurve& B,
                          const std::vector<int>& children,
                          const std::vector<double>& radii,
                          const std::vector<Vec>& slot_dirs,
                          std::optional<Point> preplaced_center,
                          const SmallZoneContext* ctx) {
    ZoneFill out;
    if (children.empty()) return out;
    double rsum = 0;
    for (double r : radii) rsum += r;

    Point cprime;
    bool have = false;
    if (preplaced_center) {
        cprime = *preplaced_center;
        have = true;
    } else {
        auto cands = place_disk_tangent_to_two(A, B, rsum);
        auto conflicts = [&](Point c, const Disk& dk) {
            // nesting either way is legitimate; only proper overlap conflicts
            double eps = 1e-9 * (1 + rsum);
            double d = dist(c, dk.center);
            if (d >= rsum + dk.radius - eps) return false;
            if (d + rsum <= dk.radius + eps) return false;
            if (d + dk.radius <= rsum + eps) return false;
            return true;
        };
        auto acceptable = [&](Point c) {
            if (!ctx) return true;
            double band = std::fabs(dist(c, ctx->path_center) - ctx->circle_radius);
            if (band + rsum > ctx->node_radius * (1 + 1e-9)) return false;
            if (ctx->avoid)
                for (const auto& dk : *ctx->avoid)
                    if (conflicts(c, dk)) return false;
            return true;
        };
        for (Point c : cands) {
            if (!acceptable(c)) continue;
            if (!have || dist(c, v) < dist(cprime, v)) {
                cprime = c;
                have = true;
            }
        }
        if (!have && !ctx && !cands.empty()) {
            cprime = cands[0];
            for (Point c : cands)
                if (dist(c, v) < dist(cprime, v)) cprime = c;
            have = true;
        }
        if (!have && ctx) {
            // extended small zone: slide along the annulus, away from the
            // zone's clockwise boundary, to the first feasible position
            Vec radial = unit(v - ctx->path_center);
            Vec mid = slot_dirs[slot_dirs.size() / 2];
            double sgn = cross(radial, mid) >= 0 ? 1.0 : -1.0;
            double dtheta = rsum / (8 * ctx->circle_radius);
            out.extended = true;
            for (double th = dtheta; th < 2 * kPi; th += dtheta) {
                Point c = ctx->path_center +
                          ctx->circle_radius * rotate(radial, sgn * th);
                bool ok = edge_point_min_dist(ctx->boundary_below, c) >=
                              rsum * (1 + 1e-9) &&
                          edge_point_min_dist(ctx->boundary_above, c) >=
                              rsum * (1 + 1e-9);
                if (ok && ctx->avoid)
                    for (const auto& dk : *ctx->avoid)
                        ok = ok && !conflicts(c, dk);
                if (ok) {
                    cprime = c;
                    have = true;
                    break;
                }
            }
        }
        if (!have) {
            std::fprintf(stderr,
                "[rej] v=(%.9g,%.9g) rsum=%.6g ncand=%zu ctx=%d\n",
                v.x, v.y, rsum, cands.size(), ctx != nullptr);
            if (ctx) {
                std::fprintf(stderr, "  rho=%.6g rnode=%.6g M=(%.9g,%.9g)\n",
                    ctx->circle_radius, ctx->node_radius, ctx->path_center.x,
                    ctx->path_center.y);
                for (Point c : cands) {
                    double band = std::fabs(dist(c, ctx->path_center) - ctx->circle_radius);
                    std::fprintf(stderr, "  cand d(v)=%.6g band=%.6g band+rsum=%.6g\n",
                        dist(c, v), band, band + rsum);
                }
            }
            throw std::logic_error("place_small_zone: no tangent placement");
        }
    }

    std::vector<PackItem> items;
    for (size_t i = 0; i < children.size(); ++i)
        items.push_back({radii[i], unit(slot_dirs[i]), static_cast<int>(i)});
    PackResult pk = lemma4_pack(v, cprime, rsum, items);
    for (size_t i = 0; i < children.size(); ++i)
        out.disks.push_back({children[i], pk.centers[i], radii[i]});
    out.separators = pk.separators;
    return out;
}

ZoneFill place_large_zone(Point v, const TangentCurve& A, const TangentCurve& B,
                          double opening, Vec bisector,
                          const std::vector<int>& children,
                          const std::vector<double>& radii,
                          const std::vector<Vec>& slot_dirs) {
    ZoneFill out;
    size_t q = children.size();
    if (q == 0) return out;
    double rsum = 0;
    for (double r : radii) rsum += r;
    Vec mu = unit(bisector);
    Point cprime = v + rsum * mu;

    if (q == 1) {
        out.disks.push_back({children[0], cprime, rsum});
        return out;
    }

    // split at a slot matching the bisector if one exists (always in the
    // uniform odd case), else inside a slot gap; both sub-zone openings must
    // stay within pi, which pins the split angle to [opening-pi, pi]
    double half = opening / 2;
    Vec a_dep = rotate(mu, -half);
    std::vector<double> slot_angles(q);
    for (size_t i = 0; i < q; ++i)
        slot_angles[i] = ccw_angle(a_dep, slot_dirs[i]);
    double lo_lim = std::max(0.0, opening - kPi);
    double hi_lim = std::min(opening, kPi);
    double psi = std::clamp(half, lo_lim, hi_lim);
    int median = -1;
    for (size_t i = 0; i < q; ++i)
        if (std::fabs(slot_angles[i] - psi) < 1e-7) median = static_cast<int>(i);
    if (median < 0 && hi_lim - lo_lim > 4e-9) {
        // nudge psi into the interior of the slot gap it falls in
        double gap_lo = 0.0, gap_hi = opening;
        for (size_t i = 0; i < q; ++i) {
            if (slot_angles[i] < psi) gap_lo = std::max(gap_lo, slot_angles[i]);
            else gap_hi = std::min(gap_hi, slot_angles[i]);
        }
        double lo2 = std::max(lo_lim + 1e-9, gap_lo + 1e-9);
        double hi2 = std::min(hi_lim - 1e-9, gap_hi - 1e-9);
        if (lo2 <= hi2)
            psi = std::clamp(half, lo2, hi2);
        else
            psi = std::clamp(0.5 * (gap_lo + gap_hi), lo_lim, hi_lim);
    }
    Vec sep_dir = rotate(a_dep, psi);

    auto group_radius = [&](size_t a, size_t b) {  // [a, b)
        double s = 0;
        for (size_t i = a; i < b; ++i) s += radii[i];
        return s;
    };

    std::vector<PackItem> items;
    size_t g1_end, g2_begin;  // children [0, g1_end) and [g2_begin, q)
    if (median >= 0) {
        g1_end = static_cast<size_t>(median);
        g2_begin = static_cast<size_t>(median) + 1;
        items.push_back({group_radius(0, g1_end), sep_dir, 0});
        items.push_back({radii[static_cast<size_t>(median)], sep_dir, 1});
        items.push_back({group_radius(g2_begin, q), sep_dir, 2});
    } else {
        size_t split = 0;
        while (split < q && slot_angles[split] < psi) ++split;
        g1_end = split;
        g2_begin = split;
        items.push_back({group_radius(0, g1_end), sep_dir, 0});
        items.push_back({group_radius(g2_begin, q), sep_dir, 1});
    }
    // drop empty end groups (a lone median at an end)
    std::vector<size_t> live;
    for (size_t i = 0; i < items.size(); ++i)
        if (items[i].radius > 0) live.push_back(i);
    std::vector<PackItem> packed;
    for (size_t i : live) packed.push_back(items[i]);
    PackResult pk = lemma4_pack(v, cprime, rsum, packed);
    std::vector<Point> centers(items.size());
    for (size_t i = 0; i < live.size(); ++i) centers[live[i]] = pk.centers[i];
    const std::vector<SeparatorArc> pack_seps = pk.separators;
    out.separators = pk.separators;

    // separator adjacent to each container group, for the slide
    auto boundary_of_sep = [&](const SeparatorArc& s, Point keep_side_of) {
        TangentCurve b;
        b.through = v;
        b.tangent = s.tangent;
        if (s.is_line) {
            b.is_line = true;
            b.zone_line_side =
                dot(rot90ccw(s.tangent), keep_side_of - v) >= 0 ? +1 : -1;
        } else {
            b.is_line = false;
            b.center = s.center;
            b.radius = s.radius;
            b.zone_inside = dist(keep_side_of, s.center) < s.radius;
        }
        return b;
    };

    auto fill_group = [&](size_t a, size_t b, Point packed_center,
                          const TangentCurve& edge_bound, bool edge_is_A) {
        if (a >= b) return;
        double gr = group_radius(a, b);
        std::vector<int> ch(children.begin() + a, children.begin() + b);
        std::vector<double> rr(radii.begin() + a, radii.begin() + b);
        std::vector<Vec> sl(slot_dirs.begin() + a, slot_dirs.begin() + b);
        // slide along the adjacent separator (the one with this group alone
        // on its side) until the container also touches the zone edge
        Point target = packed_center;
        const SeparatorArc* sep = nullptr;
        for (const auto& s : pack_seps) {
            int side = separator_side(s, packed_center, 1e-12 * (1 + rsum));
            bool alone = true;
            for (size_t i = 0; i < items.size(); ++i) {
                if (items[i].radius <= 0) continue;
                if (dist(centers[i], packed_center) < 1e-15) continue;
                if (separator_side(s, centers[i], 1e-12 * (1 + rsum)) == side)
                    alone = false;
            }
            if (alone) {
                sep = &s;
                break;
            }
        }
        if (sep) {
            TangentCurve sb = boundary_of_sep(*sep, packed_center);
            auto cands = edge_is_A ? place_disk_tangent_to_two(edge_bound, sb, gr)
                                   : place_disk_tangent_to_two(sb, edge_bound, gr);
            if (!cands.empty()) {
                target = cands[0];
                for (Point c : cands)
                    if (dist(c, packed_center) < dist(target, packed_center))
                        target = c;
            }
        }
        ZoneFill sub = place_small_zone(v, edge_bound, edge_bound, ch, rr, sl, target);
        for (auto& dsk : sub.disks) out.disks.push_back(dsk);
        for (auto& s2 : sub.separators) out.separators.push_back(s2);
    };

    if (median >= 0) {
        out.disks.push_back(
            {children[static_cast<size_t>(median)], centers[1], radii[static_cast<size_t>(median)]});
        fill_group(0, g1_end, centers[0], A, true);
        fill_group(g2_begin, q, centers[2], B, false);
    } else {
        fill_group(0, g1_end, centers[0], A, true);
        fill_group(g2_begin, q, centers[1], B, false);
    }
    // restore input order of the disks
    std::sort(out.disks.begin(), out.disks.end(),
              [&](const PlacedChildDisk& x, const PlacedChildDisk& y) {
                  auto ix = std::find(children.begin(), children.end(), x.child);
                  auto iy = std::find(children.begin(), children.end(), y.child);
                  return ix < iy;
              });
    return out;
}

LightAttachment attach_light_edge(Point v, Vec slot_dir, Point disk_center,
                                  double rho_u, double alpha_u) {
    LightAttachment att;
    if (rho_u <= 0) {
        att.edge = arc_through_point(v, slot_dir, disk_center);
        att.landing = disk_center;
        return att;
    }
    auto res = solve_arc_to_circle(v, unit(slot_dir), disk_center, rho_u,
                                   alpha_u / 2);
    if (res.status != ArcSolveStatus::Ok)
        throw std::logic_error("attach_light_edge: arc solver failed");
    att.edge = res.edge;
    att.landing = res.hit;
    return att;
}

// ---- full pipeline ---------------------------------------------------------

namespace {

struct LombardiBuilder {
    const Tree& t;
    const HeavyPathDecomposition& hpd;
    const std::vector<ZonePlan>& plans;
    int h;
    Drawing& d;
    std::map<int, double> edge_bulge;  // child node -> bulge of its parent edge
    std::vector<Disk> placed_disks;    // certification registry

    double node_radius(int v) const {
        return std::pow(4.0, h - hpd.level[v]) * hpd.light_size[v];
    }
    double subtree_disk_radius(int u) const {  // D_u of a light child u
        return 2.0 * std::pow(4.0, h - hpd.level[u]) * hpd.subtree_size[u];
    }
    // radius of the circle C_u carrying the head inside D_u
    double head_circle_radius(int u) const {
        const auto& nodes = hpd.paths[hpd.path_of(u)];
        size_t k = nodes.size();
        if (k == 1) return 0.0;
        double acc = node_radius(nodes[k - 1]);  // leaf-first accumulation
        for (size_t i = k - 1; i-- > 1;) acc += 2 * node_radius(nodes[i]);
        return acc + node_radius(nodes[0]);
    }

    // alpha of a node (full angle between its heavy-child edge and parent
    // edge slot); pi for degree-2 chain nodes by the same formula
    double alpha_of(int v) const { return plans[v].alpha; }

    void draw_path(int pid, Point M, std::optional<CurveEdge> parent_arc,
                   std::optional<Point> landing) {
        std::vector<int> nodes = hpd.paths[pid];        // head first
        std::reverse(nodes.begin(), nodes.end());       // leaf first
        const size_t k = nodes.size();
        std::vector<double> radii(k), alphas(k, kPi);
        for (size_t i = 0; i < k; ++i) radii[i] = node_radius(nodes[i]);
        for (size_t i = 1; i < k; ++i) {
            int v = nodes[i];
            alphas[i] = (v == t.root) ? kPi : alpha_of(v);
        }

        PathSkeleton sk = draw_path_skeleton(M, {1, 0}, radii, alphas);
        if (parent_arc) {
            // rotate so the head lands on the attachment point
            Point head_prov = sk.pos[k - 1];
            double delta =
                angle_of(*landing - M) - angle_of(head_prov - M);
            if (k > 1) {
                for (size_t i = 0; i < k; ++i) {
                    sk.pos[i] = M + rotate(sk.pos[i] - M, delta);
                    sk.stub[i] = rotate(sk.stub[i], delta);
                }
                for (auto& a : sk.arcs) {
                    a.a = M + rotate(a.a - M, delta);
                    a.b = M + rotate(a.b - M, delta);
                }
                sk.pos[k - 1] = *landing;  // exact
            } else {
                sk.pos[0] = *landing;
            }
        }
        for (size_t i = 0; i < k; ++i) d.position[nodes[i]] = sk.pos[i];
        for (size_t i = 0; i + 1 < k; ++i)
            edge_bulge[nodes[i]] = sk.arcs[i].bulge == 0.0 ? 0.0 : -sk.arcs[i].bulge;

        // disk annotations
        for (size_t i = 0; i < k; ++i)
            d.disks.push_back({nodes[i], sk.pos[i], radii[i], DiskKind::Node});
        double path_r = 0;
        for (double r : radii) path_r += 2 * r;
        d.disks.push_back({nodes[k - 1], M, path_r, DiskKind::Path});

        // light children, node by node (leaf upward)
        for (size_t i = 1; i < k; ++i) {
            int v = nodes[i];
            const ZonePlan& plan = plans[v];
            Point vp = sk.pos[i];
            CurveEdge below = sk.arcs[i - 1];  // heavy-child edge, ends at v
            Vec dep_below = departure_at(below, EdgeEnd::B);

            std::optional<CurveEdge> above;  // parent edge at v
            Vec dep_above{0, 0};
            if (i + 1 < k) {
                above = sk.arcs[i];
                dep_above = departure_at(*above, EdgeEnd::A);
            } else if (parent_arc) {
                above = *parent_arc;
                dep_above = departure_at(*parent_arc, EdgeEnd::B);
            }

            auto make_slots = [&](Vec base, const std::vector<double>& cums) {
                std::vector<Vec> out;
                for (double a : cums) out.push_back(rotate(base, a));
                return out;
            };

            if (v == t.root) {
                // wrap-around zone bounded by the heavy-child edge on both sides
                if (!plan.alpha_side.empty()) {
                    TangentCurve A = boundary_from_edge(below, vp, dep_below, true);
                    TangentCurve B = boundary_from_edge(below, vp, dep_below, false);
                    auto slots = make_slots(dep_below, plan.alpha_slots);
                    auto fill = place_large_zone(
                        vp, A, B, 2 * kPi, rotate(dep_below, kPi),
                        plan.alpha_side, child_radii(plan.alpha_side), slots);
                    attach_and_recurse(v, vp, fill, slots, plan.alpha_side);
                }
                continue;
            }
            if (!above) throw std::logic_error("draw_path: head without parent arc");

            // avoid registry: everything placed plus this path's other disks
            std::vector<Disk> avoid = placed_disks;
            for (size_t m = 0; m < k; ++m)
                if (m != i) avoid.push_back({sk.pos[m], radii[m]});
            SmallZoneContext zctx;
            zctx.path_center = M;
            zctx.circle_radius = sk.circle_radius[i];
            zctx.node_radius = radii[i];
            zctx.boundary_below = below;
            zctx.boundary_above = *above;
            zctx.avoid = &avoid;

            // alpha side: ccw from the heavy-child edge to the parent edge
            if (!plan.alpha_side.empty()) {
                TangentCurve A = boundary_from_edge(below, vp, dep_below, true);
                TangentCurve B = boundary_from_edge(*above, vp, dep_above, false);
                auto slots = make_slots(dep_below, plan.alpha_slots);
                ZoneFill fill;
                if (plan.alpha <= kPi + 1e-12) {
                    fill = place_small_zone(vp, A, B, plan.alpha_side,
                                            child_radii(plan.alpha_side), slots,
                                            std::nullopt, &zctx);
                } else {
                    fill = place_large_zone(vp, A, B, plan.alpha,
                                            rotate(dep_below, plan.alpha / 2),
                                            plan.alpha_side,
                                            child_radii(plan.alpha_side), slots);
                }
                attach_and_recurse(v, vp, fill, slots, plan.alpha_side);
            }
            // conjugate side: ccw from the parent edge to the heavy-child edge
            if (!plan.conjugate_side.empty()) {
                double beta = 2 * kPi - plan.alpha;
                TangentCurve A = boundary_from_edge(*above, vp, dep_above, true);
                TangentCurve B = boundary_from_edge(below, vp, dep_below, false);
                auto slots = make_slots(dep_above, plan.conjugate_slots);
                ZoneFill fill;
                if (beta <= kPi + 1e-12) {
                    fill = place_small_zone(vp, A, B, plan.conjugate_side,
                                            child_radii(plan.conjugate_side), slots,
                                            std::nullopt, &zctx);
                } else {
                    fill = place_large_zone(vp, A, B, beta,
                                            rotate(dep_above, beta / 2),
                                            plan.conjugate_side,
                                            child_radii(plan.conjugate_side), slots);
                }
                attach_and_recurse(v, vp, fill, slots, plan.conjugate_side);
            }
        }
    }

    std::vector<double> child_radii(const std::vector<int>& kids) const {
        std::vector<double> out;
        for (int u : kids) out.push_back(subtree_disk_radius(u));
        return out;
    }

    void attach_and_recurse(int v, Point vp, const ZoneFill& fill,
                            const std::vector<Vec>& slots,
                            const std::vector<int>& kids) {
        (void)v;
        for (size_t i = 0; i < kids.size(); ++i) {
            int u = kids[i];
            const PlacedChildDisk* pd = nullptr;
            for (const auto& cd : fill.disks)
                if (cd.child == u) pd = &cd;
            if (!pd) throw std::logic_error("attach_and_recurse: child not placed");
            placed_disks.push_back({pd->center, pd->radius});
            double rho_u = head_circle_radius(u);
            double alpha_u = t.is_leaf(u) ? 0.0 : alpha_of(u);
            LightAttachment att =
                attach_light_edge(vp, slots[i], pd->center, rho_u, alpha_u);
            edge_bulge[u] = att.edge.bulge;
            if (t.is_leaf(u)) {
                d.position[u] = att.landing;
                d.disks.push_back({u, pd->center, pd->radius, DiskKind::Path});
            } else {
                draw_path(hpd.path_of(u), pd->center, att.edge, att.landing);
            }
        }
    }
};

}  // namespace

Drawing layout_lombardi(const Tree& t, bool with_disks,
                        const AngleAssignment& angles) {
    Drawing d;
    d.mode = DrawingMode::Lombardi;
    d.position.assign(t.n, Point{});
    HeavyPathDecomposition hpd = decompose(t);
    d.decomposition_height = hpd.height;
    if (t.n == 1) {
        for (auto [u, v] : canonical_edges(t)) d.edges.push_back({u, v, 0.0});
        return d;
    }
    std::vector<ZonePlan> plans = compute_angles(t, hpd, angles);
    LombardiBuilder b{t, hpd, plans, hpd.height, d, {}, {}};
    b.draw_path(hpd.path_of(t.root), {0, 0}, std::nullopt, std::nullopt);
    for (auto [u, v] : canonical_edges(t)) {
        auto it = b.edge_bulge.find(v);
        d.edges.push_back({u, v, it == b.edge_bulge.end() ? 0.0 : it->second});
    }
    if (!with_disks) d.disks.clear();
    return d;
}

std::vector<ZonePlan> lombardi_zone_plans(const Tree& t) {
    return compute_angles(t, decompose(t), {});
}

}  // namespace lombardi
