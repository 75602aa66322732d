#include <cmath>

#include "doctest.h"
#include "lombardi/generate.h"
#include "lombardi/straight_layout.h"
#include "lombardi/verify.h"

using namespace lombardi;

namespace {
constexpr double kPi = 3.14159265358979323846;

Tree random_tree(int n, uint64_t seed) {
    GenSpec g;
    g.family = TreeFamily::Random;
    g.n = n;
    g.seed = seed;
    return gen(g);
}

VerificationReport quick_verify(const Tree& t, const Drawing& d) {
    VerifyOptions vo;
    vo.compute_clearance = false;
    return verify(t, d, vo);
}

}  // namespace

TEST_CASE("layout_heavy_node basic shapes") {
    // d(v)=2, no light children: stubs at angle pi (two heavy edges opposite)
    NodeDrawing nd2 = layout_heavy_node(0, 2, false, {}, 8.0, true);
    CHECK(nd2.heavy_spoke == 1);
    CHECK(std::fabs(nd2.heavy_out_dir() - 0.0) < 1e-15);
    CHECK(nd2.radius == 8.0);

    // d(v)=4, two light leaf children on opposite vertical spokes
    NodeDrawing nd4 = layout_heavy_node(0, 4, false, {{10, 1.0}, {11, 1.0}}, 8.0, true);
    CHECK(nd4.heavy_spoke == 2);
    REQUIRE(nd4.placements.size() == 2);
    CHECK(nd4.placements[0].spoke == 1);
    CHECK(nd4.placements[1].spoke == 3);
    CHECK(std::fabs(nd4.spoke_angle(1) - kPi / 2) < 1e-12);
    CHECK(std::fabs(nd4.spoke_angle(3) - (-kPi / 2)) < 1e-12);

    // d(v)=8: the large-child bound allows at most one large child
    double sd = std::sin(kPi / 8);
    double bound = 1 + (1 + sd) / (4 * sd);
    CHECK(bound == doctest::Approx(1.9033).epsilon(1e-3));
}

TEST_CASE("layout_heavy_node heavy stub angles stay in [2pi/3, 4pi/3]") {
    for (int d = 2; d <= 40; ++d) {
        NodeDrawing nd = layout_heavy_node(0, d, false, {}, 8.0, true);
        double between = ccw_angle(dir(nd.parent_dir()), dir(nd.heavy_out_dir()));
        double a = std::min(between, 2 * kPi - between);
        CHECK(a >= 2 * kPi / 3 - 1e-12);
        CHECK(a <= 4 * kPi / 3 + 1e-12);
    }
}

TEST_CASE("layout_heavy_path_straight: single node and path tree") {
    // k = 1: D = D_1, r = 2 r_1
    NodeDrawing leaf = layout_heavy_node(0, 1, false, {}, 1.0, false);
    PathDrawing pd = layout_heavy_path_straight(0, {0}, {leaf}, {1.0});
    CHECK(pd.disk_radius == 2.0);

    // a path tree draws as a straight horizontal segment; radius <= 2n
    GenSpec g;
    g.family = TreeFamily::Path;
    g.n = 12;
    Tree t = gen(g);
    Drawing d = layout_straight(t);
    for (int v = 0; v < t.n; ++v) CHECK(std::fabs(d.position[v].y) < 1e-12);
    for (int v = 1; v < t.n; ++v)
        CHECK(d.position[v].x > d.position[v - 1].x);
    auto rep = quick_verify(t, d);
    CHECK(rep.pass);
    CHECK(rep.bound->enclosing_radius <= 2.0 * t.n);
}

TEST_CASE("mirror choice keeps the chain in the wedge") {
    // a 3-node heavy path with asymmetric light children forces nonzero
    // stub angles; the chain must stay x-monotone within +-pi/3
    Tree t = parse_tree(
        "9 unordered\n1 2\n2 3\n1 4\n4 5\n4 6\n2 7\n7 8\n7 9\n",
        TreeFormat::EdgeList);
    StraightLayout L = layout_straight_structured(t);
    for (const auto& pd : L.paths) {
        for (size_t i = 1; i < pd.poses.size(); ++i) {
            Vec step = pd.poses[i].offset - pd.poses[i - 1].offset;
            CHECK(step.x > 0);  // x-monotone
            CHECK(std::fabs(std::atan2(step.y, step.x)) <= kPi / 3 + 1e-9);
        }
    }
    CHECK(quick_verify(t, L.emit()).pass);
}

TEST_CASE("layout_straight trivial cases") {
    Tree one = parse_tree("solo", TreeFormat::NestedParen);
    Drawing d1 = layout_straight(one);
    CHECK(d1.position.size() == 1);
    CHECK(d1.edges.empty());

    // star root + 6 leaves: root centered, leaves at equal angles 2pi/6
    GenSpec g;
    g.family = TreeFamily::Star;
    g.n = 7;
    Tree star = gen(g);
    Drawing d = layout_straight(star);
    auto rep = quick_verify(star, d);
    CHECK(rep.pass);
    CHECK(rep.resolution.max_residual < 1e-9);
    CHECK(rep.planarity.crossings.empty());
}

TEST_CASE("random trees: verifier passes at moderate sizes") {
    for (uint64_t seed : {1ULL, 7ULL, 42ULL, 99ULL}) {
        for (int n : {2, 3, 10, 57, 300}) {
            Tree t = random_tree(n, seed);
            Drawing d = layout_straight(t);
            auto rep = quick_verify(t, d);
            CHECK(rep.resolution.pass);
            CHECK(rep.planarity.pass);
            CHECK(rep.bound->pass);
            CHECK(*rep.containment_ok);
            if (!rep.pass) {
                CAPTURE(seed);
                CAPTURE(n);
                CHECK(rep.pass);
            }
        }
    }
}

TEST_CASE("random 1000-node tree, seed 42") {
    Tree t = random_tree(1000, 42);
    Drawing d = layout_straight(t);
    VerifyOptions vo;
    vo.compute_clearance = false;
    vo.resolution_eps = 1e-6;  // double storage at these scales
    auto rep = verify(t, d, vo);
    CHECK(rep.planarity.pass);
    CHECK(rep.bound->pass);
    CHECK(rep.resolution.max_residual < 1e-6);
}

TEST_CASE("containment hierarchy and the Theorem-1 bound") {
    for (uint64_t seed : {3ULL, 4ULL}) {
        Tree t = random_tree(150, seed);
        Drawing d = layout_straight(t);
        auto rep = quick_verify(t, d);
        CHECK(*rep.containment_ok);
        double n4 = 2.0 * std::pow(static_cast<double>(t.n), 4);
        CHECK(rep.bound->enclosing_radius <= rep.bound->bound);
        CHECK(rep.bound->enclosing_radius <= n4);
    }
}

TEST_CASE("optimize_fill_outer") {
    // node whose children all fit outside -> inner region empty
    std::vector<LightChildDisk> kids{{10, 1.0}, {11, 0.9}, {12, 0.8}};
    NodeDrawing nd = layout_heavy_node(0, 6, false, kids, 64.0, true);
    size_t outer_before = 0;
    for (const auto& p : nd.placements) outer_before += p.outer;
    optimize_fill_outer(nd);
    size_t outer_after = 0;
    for (const auto& p : nd.placements) outer_after += p.outer;
    CHECK(outer_after >= outer_before);  // greedy monotonicity
    CHECK(outer_after == 3);             // all fit outside here

    // optimized drawings still verify
    for (uint64_t seed : {5ULL, 6ULL}) {
        Tree t = random_tree(120, seed);
        StraightLayout L = layout_straight_structured(t);
        for (auto& pd : L.paths)
            for (auto& m : pd.node_drawings) optimize_fill_outer(m);
        CHECK(quick_verify(t, L.emit()).pass);
    }
}

TEST_CASE("optimize_scale_subtrees") {
    for (uint64_t seed : {8ULL, 9ULL}) {
        Tree t = random_tree(120, seed);
        StraightLayout L = layout_straight_structured(t);
        Drawing before = L.emit();
        optimize_scale_subtrees(L);
        Drawing after = L.emit();
        auto rep = quick_verify(t, after);
        CHECK(rep.pass);
        // shortest-edge metric never worse (pure upscaling)
        CHECK(area_ratio(after, AreaMetric::ShortestEdge) <=
              area_ratio(before, AreaMetric::ShortestEdge) * (1 + 1e-9));
    }
}

TEST_CASE("optimize_expand_path") {
    for (uint64_t seed : {10ULL, 11ULL}) {
        Tree t = random_tree(120, seed);
        StraightLayout L = layout_straight_structured(t);
        double r_before = enclosing_disk(L.emit()).radius;
        for (auto& pd : L.paths) optimize_expand_path(pd);
        Drawing after = L.emit();
        CHECK(quick_verify(t, after).pass);
        // scale factors are >= 1 and capped by the disk
        for (const auto& pd : L.paths) CHECK(pd.content_scale >= 1.0);
        CHECK(enclosing_disk(after).radius >= r_before * (1 - 1e-12));
    }
}

TEST_CASE("full optimization keeps all properties and helps area") {
    int improved = 0;
    for (uint64_t seed = 20; seed < 30; ++seed) {
        Tree t = random_tree(100, seed);
        Drawing base = layout_straight(t, false);
        Drawing opt = layout_straight(t, true);
        auto rep = quick_verify(t, opt);
        CHECK(rep.pass);
        if (area_ratio(opt, AreaMetric::ShortestEdge) <
            area_ratio(base, AreaMetric::ShortestEdge))
            ++improved;
    }
    CHECK(improved >= 8);  // the passes should help on nearly every tree
}
