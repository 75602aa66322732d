#include "lombardi/generate.h"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace lombardi {

namespace {

constexpr double kPi = 3.14159265358979323846;

Tree from_parents(std::vector<int> parent, std::vector<std::vector<int>> children,
                  bool ordered) {
    Tree t;
    t.n = static_cast<int>(parent.size());
    t.parent = std::move(parent);
    t.children = std::move(children);
    t.ordered = ordered;
    for (int v = 0; v < t.n; ++v)
        if (t.parent[v] < 0) t.root = v;
    t.labels.resize(t.n);
    for (int v = 0; v < t.n; ++v) t.labels[v] = std::to_string(v + 1);
    t.validate();
    return t;
}

}  // namespace

TreeFamily family_from_name(const std::string& s) {
    if (s == "path") return TreeFamily::Path;
    if (s == "star") return TreeFamily::Star;
    if (s == "kary") return TreeFamily::Kary;
    if (s == "random") return TreeFamily::Random;
    if (s == "fibonacci-caterpillar" || s == "caterpillar")
        return TreeFamily::FibonacciCaterpillar;
    throw std::invalid_argument("unknown tree family: " + s);
}

Tree gen(const GenSpec& spec) {
    switch (spec.family) {
        case TreeFamily::Path: {
            if (spec.n < 1) throw std::invalid_argument("gen: n >= 1 required");
            std::vector<int> parent(spec.n, -1);
            std::vector<std::vector<int>> children(spec.n);
            for (int i = 1; i < spec.n; ++i) {
                parent[i] = i - 1;
                children[i - 1].push_back(i);
            }
            return from_parents(parent, children, spec.ordered);
        }
        case TreeFamily::Star: {
            if (spec.n < 1) throw std::invalid_argument("gen: n >= 1 required");
            std::vector<int> parent(spec.n, -1);
            std::vector<std::vector<int>> children(spec.n);
            for (int i = 1; i < spec.n; ++i) {
                parent[i] = 0;
                children[0].push_back(i);
            }
            return from_parents(parent, children, spec.ordered);
        }
        case TreeFamily::Kary: {
            if (spec.n < 1 || spec.arity < 1)
                throw std::invalid_argument("gen: n >= 1, arity >= 1 required");
            std::vector<int> parent(spec.n, -1);
            std::vector<std::vector<int>> children(spec.n);
            for (int i = 1; i < spec.n; ++i) {
                parent[i] = (i - 1) / spec.arity;
                children[parent[i]].push_back(i);
            }
            return from_parents(parent, children, spec.ordered);
        }
        case TreeFamily::Random: {
            if (spec.n < 1) throw std::invalid_argument("gen: n >= 1 required");
            SplitMix64 rng(spec.seed);
            std::vector<int> parent(spec.n, -1);
            std::vector<std::vector<int>> children(spec.n);
            for (int i = 1; i < spec.n; ++i) {
                parent[i] = static_cast<int>(rng.below(static_cast<uint64_t>(i)));
                children[parent[i]].push_back(i);
            }
            return from_parents(parent, children, spec.ordered);
        }
        case TreeFamily::FibonacciCaterpillar: {
            int k = spec.k;
            if (k < 1) throw std::invalid_argument("gen: caterpillar needs k >= 1");
            int n = 4 * k;
            std::vector<int> parent(n, -1);
            std::vector<std::vector<int>> children(n);
            // spine vertex i occupies id 4*i; its leaves 4*i+1..4*i+3.
            for (int i = 0; i < k; ++i) {
                int s = 4 * i;
                if (i > 0) {
                    parent[s] = 4 * (i - 1);
                }
                for (int j = 1; j <= 3; ++j) {
                    parent[s + j] = s;
                    children[s].push_back(s + j);
                }
                if (i + 1 < k) children[s].push_back(4 * (i + 1));
            }
            return from_parents(parent, children, true);
        }
    }
    throw std::invalid_argument("gen: bad family");
}

// ------------------------------------------------------------- spiral demo

namespace {

// Self-similar double spiral: spine edge lengths shrink by a constant factor
// per step away from the midpoint; the factor is maximized by binary search
// against the crossing checks. The perfect-resolution directions are forced
// by the embedding, so the only freedom is in the lengths.
struct SpiralShape {
    std::vector<Point> pos;
    std::vector<CurveEdge> segs;
    std::vector<std::pair<int, int>> seg_nodes;
    bool ok = false;
};

SpiralShape build_spiral(const Tree& t, int k, double c) {
    const double step = 2 * kPi / 5;
    SpiralShape sh;
    sh.pos.resize(t.n);
    int m = k / 2;
    sh.pos[4 * m] = {0, 0};

    // symmetric about the true spine middle (an edge midpoint for even k);
    // edge i, spanning spine positions [i, i+1], shrinks as c^|i+0.5-x0|
    double x0 = (k - 1) / 2.0;
    auto edge_len = [&](int i) { return std::pow(c, std::fabs(i + 0.5 - x0)); };
    auto leaf_len = [&](int i) {
        return 0.45 * std::pow(c, std::fabs(i - x0) + 0.5);
    };

    std::vector<double> to_next(k, 0.0), to_prev(k, 0.0);
    if (m + 1 < k) {
        to_next[m] = 0.0;
        to_prev[m] = step;  // ccw neighbor of the next-edge
    } else {
        to_prev[m] = kPi;  // k = 2: the midpoint is the far end
    }
    // forward arm turns +3pi/5, backward arm mirrors it
    for (int i = m; i + 1 < k; ++i) {
        sh.pos[4 * (i + 1)] = sh.pos[4 * i] + edge_len(i) * dir(to_next[i]);
        sh.seg_nodes.emplace_back(4 * i, 4 * (i + 1));
        to_prev[i + 1] = to_next[i] + kPi;
        if (i + 2 < k) to_next[i + 1] = to_prev[i + 1] + 4 * step;
    }
    for (int i = m; i > 0; --i) {
        sh.pos[4 * (i - 1)] = sh.pos[4 * i] + edge_len(i - 1) * dir(to_prev[i]);
        sh.seg_nodes.emplace_back(4 * i, 4 * (i - 1));
        to_next[i - 1] = to_prev[i] + kPi;
        if (i - 1 > 0) to_prev[i - 1] = to_next[i - 1] + step;
    }
    // leaves: ccw order between the spine edges; 2pi/4 gaps at the ends
    for (int i = 0; i < k; ++i) {
        double base, gap;
        if (i > 0 && i + 1 < k) {
            base = to_prev[i];
            gap = step;
        } else if (i == 0 && k > 1) {
            base = to_next[i];
            gap = kPi / 2;
        } else if (i == k - 1 && k > 1) {
            base = to_prev[i];
            gap = kPi / 2;
        } else {  // k == 1
            base = 0.0;
            gap = 2 * kPi / 3;
        }
        double L = leaf_len(i);
        for (int j = 1; j <= 3; ++j) {
            int leaf = 4 * i + j;
            sh.pos[leaf] = sh.pos[4 * i] + L * dir(base + j * gap);
            sh.seg_nodes.emplace_back(4 * i, leaf);
        }
    }
    for (auto [u, v] : sh.seg_nodes) sh.segs.push_back({sh.pos[u], sh.pos[v], 0.0});

    // validity: non-adjacent edges keep relative clearance
    const double margin = 0.3;
    for (size_t i = 0; i < sh.segs.size(); ++i) {
        for (size_t j = i + 1; j < sh.segs.size(); ++j) {
            auto [a1, b1] = sh.seg_nodes[i];
            auto [a2, b2] = sh.seg_nodes[j];
            if (a1 == a2 || a1 == b2 || b1 == a2 || b1 == b2) continue;
            double need = margin * std::min(chord_length(sh.segs[i]),
                                            chord_length(sh.segs[j]));
            if (edge_edge_min_dist(sh.segs[i], sh.segs[j]) < need) return sh;
        }
    }
    sh.ok = true;
    return sh;
}

}  // namespace

namespace {

// largest per-step shrink factor that keeps the spiral crossing-free
double max_feasible_factor(const Tree& t, int k) {
    double lo = 0.05, hi = 0.999;
    if (!build_spiral(t, k, lo).ok)
        throw std::logic_error("spiral_demo: base factor infeasible");
    for (int it = 0; it < 60; ++it) {
        double mid = 0.5 * (lo + hi);
        (build_spiral(t, k, mid).ok ? lo : hi) = mid;
    }
    return lo;
}

Drawing spiral_to_drawing(const Tree& t, const SpiralShape& sh) {
    Drawing d;
    d.mode = DrawingMode::Straight;
    d.position = sh.pos;
    for (auto [u, v] : canonical_edges(t)) d.edges.push_back({u, v, 0.0});
    d.decomposition_height = decompose(t).height;
    return d;
}

}  // namespace

Drawing spiral_demo_single(const Tree& t) {
    // spine ids are 4*i by construction; leaves 4i+1..4i+3
    int k = t.n / 4;
    if (k < 1 || t.n != 4 * k)
        throw std::invalid_argument("spiral_demo: not a Fibonacci caterpillar");
    return spiral_to_drawing(t, build_spiral(t, k, max_feasible_factor(t, k)));
}

SpiralDemoResult spiral_demo(int kmax) {
    if (kmax < 2) throw std::invalid_argument("spiral_demo: kmax >= 2");
    SpiralDemoResult res;
    // one factor for the whole series keeps the shrink law uniform in k;
    // the end-vertex geometry differs per k, so start from the min over the
    // range and back off until every k accepts it
    std::vector<Tree> trees;
    double c = 1.0;
    for (int k = 2; k <= kmax; ++k) {
        GenSpec spec;
        spec.family = TreeFamily::FibonacciCaterpillar;
        spec.k = k;
        trees.push_back(gen(spec));
        c = std::min(c, max_feasible_factor(trees.back(), k));
    }
    // back off from the critical factor: at the knife edge the closest pair
    // lands on an arbitrary near-contact, off it every distance follows the
    // self-similar law and the growth is cleanly exponential
    c *= 0.75;
    for (int guard = 0; guard < 400; ++guard) {
        bool all_ok = true;
        for (int k = 2; k <= kmax && all_ok; ++k)
            all_ok = build_spiral(trees[k - 2], k, c).ok;
        if (all_ok) break;
        c *= 0.99;
    }
    for (int k = 2; k <= kmax; ++k) {
        GenSpec spec;
        spec.family = TreeFamily::FibonacciCaterpillar;
        spec.k = k;
        Tree t = gen(spec);
        SpiralShape sh = build_spiral(t, k, c);
        if (!sh.ok) throw std::logic_error("spiral_demo: factor infeasible at k");
        Drawing d = spiral_to_drawing(t, sh);
        Disk enc = smallest_enclosing_circle(d.position);
        double mind = std::numeric_limits<double>::infinity();
        for (int a = 0; a < t.n; ++a)
            for (int b = a + 1; b < t.n; ++b)
                mind = std::min(mind, dist(d.position[a], d.position[b]));
        SpiralDemoRow row;
        row.k = k;
        row.n = t.n;
        row.enclosing_radius = enc.radius;
        row.min_vertex_distance = mind;
        row.area_ratio = kPi * enc.radius * enc.radius / (mind * mind);
        res.rows.push_back(row);
        res.trees.push_back(std::move(t));
        res.drawings.push_back(std::move(d));
    }
    return res;
}

}  // namespace lombardi
