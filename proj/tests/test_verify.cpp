#include <cmath>
#include <random>

#include "doctest.h"
#include "lombardi/generate.h"
#include "lombardi/render.h"
#include "lombardi/straight_layout.h"
#include "lombardi/verify.h"

using namespace lombardi;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("check_resolution") {
    // degree-1 vertices pass vacuously
    Tree t2 = parse_tree("(b)a", TreeFormat::NestedParen);
    Drawing d2;
    d2.position = {{0, 0}, {1, 0}};
    d2.edges = {{0, 1, 0.0}};
    CHECK(check_resolution(t2, d2).pass);

    // perfect cross: residual 0
    Tree cross = parse_tree("5 unordered\nr a\nr b\nr c\nr d\n", TreeFormat::EdgeList);
    Drawing dc;
    dc.position = {{0, 0}, {1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    for (auto [u, v] : canonical_edges(cross)) dc.edges.push_back({u, v, 0.0});
    auto r = check_resolution(cross, dc);
    CHECK(r.pass);
    CHECK(r.max_residual < 1e-12);

    // one edge perturbed by 1e-3 rad: residual = 1e-3, fail at eps 1e-9
    Drawing dp = dc;
    dp.position[2] = dir(kPi / 2 + 1e-3);
    auto rp = check_resolution(cross, dp);
    CHECK(!rp.pass);
    CHECK(rp.max_residual == doctest::Approx(1e-3).epsilon(1e-6));
}

TEST_CASE("check_planarity") {
    // star drawing: no crossings
    Tree star = parse_tree("5 unordered\nr a\nr b\nr c\nr d\n", TreeFormat::EdgeList);
    Drawing ds;
    ds.position = {{0, 0}, {1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    for (auto [u, v] : canonical_edges(star)) ds.edges.push_back({u, v, 0.0});
    CHECK(check_planarity(star, ds).pass);

    // two crossing segments among 4 vertices: exactly one crossing
    Tree tt = parse_tree("4 unordered\n1 2\n2 3\n3 4\n", TreeFormat::EdgeList);
    Drawing dx;
    dx.position = {{0, 0}, {2, 2}, {0, 2}, {2, 0}};
    for (auto [u, v] : canonical_edges(tt)) dx.edges.push_back({u, v, 0.0});
    auto px = check_planarity(tt, dx);
    CHECK(!px.pass);
    CHECK(px.crossings.size() == 1);
}

TEST_CASE("accelerated planarity equals brute force") {
    std::mt19937_64 rng(7);
    for (int rep = 0; rep < 12; ++rep) {
        GenSpec g;
        g.family = TreeFamily::Random;
        g.n = 200 + static_cast<int>(rng() % 300);
        g.seed = rep * 31 + 1;
        Tree t = gen(g);
        Drawing d = layout_straight(t, rep % 2 == 1);
        // also scrambled drawings with genuine crossings
        if (rep % 3 == 0) {
            std::uniform_real_distribution<double> u(-100, 100);
            for (auto& p : d.position) p = {u(rng), u(rng)};
        }
        auto fast = check_planarity(t, d, false, false);
        auto slow = check_planarity(t, d, true, false);
        CHECK(fast.crossings.size() == slow.crossings.size());
        CHECK(fast.pass == slow.pass);
    }
}

TEST_CASE("check_embedding") {
    // ids in interning order: r=0, a=1, b=2, c=3
    Tree star = parse_tree("4 ordered\nr a\nr b\nr c\n", TreeFormat::EdgeList);
    Drawing d;
    d.position = {{0, 0}, dir(0.3), dir(0.3 + 2 * kPi / 3), dir(0.3 + 4 * kPi / 3)};
    for (auto [u, v] : canonical_edges(star)) d.edges.push_back({u, v, 0.0});
    CHECK(check_embedding(star, d));  // any rotation of the cyclic order matches

    std::swap(d.position[1], d.position[2]);  // swapped children: fail
    CHECK(!check_embedding(star, d));
}

TEST_CASE("area_ratio") {
    // two vertices distance 1: enclosing radius 0.5, ratio pi/4
    Tree t2 = parse_tree("(b)a", TreeFormat::NestedParen);
    Drawing d2;
    d2.position = {{0, 0}, {1, 0}};
    d2.edges = {{0, 1, 0.0}};
    CHECK(area_ratio(d2, AreaMetric::ClosestVertices) ==
          doctest::Approx(kPi / 4).epsilon(1e-12));
    CHECK(area_ratio(d2, AreaMetric::ShortestEdge) ==
          doctest::Approx(kPi / 4).epsilon(1e-12));

    // unit-spaced collinear path of n vertices: ratio pi (n-1)^2 / 4
    for (int n : {3, 7, 20}) {
        GenSpec g;
        g.family = TreeFamily::Path;
        g.n = n;
        Tree t = gen(g);
        Drawing d;
        d.position.resize(n);
        for (int i = 0; i < n; ++i) d.position[i] = {static_cast<double>(i), 0};
        for (auto [u, v] : canonical_edges(t)) d.edges.push_back({u, v, 0.0});
        CHECK(area_ratio(d, AreaMetric::ClosestVertices) ==
              doctest::Approx(kPi * (n - 1) * (n - 1) / 4.0).epsilon(1e-9));
    }

    // degenerate: coincident vertices
    Drawing dz;
    dz.position = {{0, 0}, {0, 0}};
    dz.edges = {{0, 1, 0.0}};
    CHECK_THROWS_AS(area_ratio(dz, AreaMetric::ClosestVertices), std::domain_error);
}

TEST_CASE("area_ratio scale invariance") {
    GenSpec g;
    g.family = TreeFamily::Random;
    g.n = 60;
    g.seed = 5;
    Tree t = gen(g);
    Drawing d = layout_straight(t);
    double base_cv = area_ratio(d, AreaMetric::ClosestVertices);
    double base_se = area_ratio(d, AreaMetric::ShortestEdge);
    Drawing scaled = d;
    for (auto& p : scaled.position) p = 7.3 * p;
    CHECK(area_ratio(scaled, AreaMetric::ClosestVertices) ==
          doctest::Approx(base_cv).epsilon(1e-9));
    CHECK(area_ratio(scaled, AreaMetric::ShortestEdge) ==
          doctest::Approx(base_se).epsilon(1e-9));
}

TEST_CASE("check_bound") {
    GenSpec g;
    g.family = TreeFamily::Path;
    g.n = 10;
    Tree path = gen(g);
    Drawing d = layout_straight(path);
    auto b = check_bound(path, d, DrawingMode::Straight);
    CHECK(b.pass);
    CHECK(b.enclosing_radius <= 20.0);  // Theorem 1 with h = 0

    Tree one = parse_tree("x", TreeFormat::NestedParen);
    Drawing d1 = layout_straight(one);
    CHECK(check_bound(one, d1, DrawingMode::Straight).pass);
}

TEST_CASE("verifier is layout independent (JSON round trip)") {
    GenSpec g;
    g.family = TreeFamily::Random;
    g.n = 80;
    g.seed = 17;
    Tree t = gen(g);
    Drawing d = layout_straight(t);
    auto rep1 = verify(t, d);
    LoadedDrawing ld = from_json(to_json(t, d));
    auto rep2 = verify(ld.tree, ld.drawing);
    CHECK(rep1.resolution.pass == rep2.resolution.pass);
    CHECK(rep1.planarity.pass == rep2.planarity.pass);
    CHECK(rep1.planarity.crossings.size() == rep2.planarity.crossings.size());
    CHECK(rep1.resolution.max_residual ==
          doctest::Approx(rep2.resolution.max_residual).epsilon(1e-12));
    // report serialization exists and is JSON-ish
    CHECK(rep1.to_json().find("\"pass\"") != std::string::npos);
}

TEST_CASE("grazing contacts are reported but not counted as crossings") {
    // two externally tangent semicircle arcs
    Tree tt = parse_tree("4 unordered\n1 2\n2 3\n3 4\n", TreeFormat::EdgeList);
    Drawing d;
    d.position = {{0, 0}, {2, 0}, {4, 0}, {6, 0}};
    d.edges = {{0, 1, 1.0}, {1, 2, 0.0}, {2, 3, 1.0}};
    // edge 0 arc has center (1,0) r=1; edge 2 center (5,0) r=1: disjoint
    auto p = check_planarity(tt, d);
    CHECK(p.pass);

    // two non-adjacent semicircles tangent at (0.5, 0.5); the connector is
    // tangent to both circles exactly at the shared endpoints
    Tree t4 = parse_tree("4 unordered\n1 2\n2 3\n3 4\n", TreeFormat::EdgeList);
    Drawing d4;
    d4.position = {{0, 0}, {1, 0}, {1, 1}, {0, 1}};
    d4.edges = {{0, 1, 1.0}, {1, 2, 0.0}, {2, 3, 1.0}};
    auto p4 = check_planarity(t4, d4);
    CHECK(p4.grazing_count > 0);
    CHECK(p4.crossings.empty());
}
