#include <cmath>

#include "doctest.h"
#include "lombardi/generate.h"
#include "lombardi/verify.h"

using namespace lombardi;

TEST_CASE("caterpillar structure") {
    GenSpec g1;
    g1.family = TreeFamily::FibonacciCaterpillar;
    g1.k = 1;
    Tree t1 = gen(g1);
    CHECK(t1.n == 4);
    CHECK(t1.children[t1.root].size() == 3);  // star with 3 leaves

    GenSpec g5;
    g5.family = TreeFamily::FibonacciCaterpillar;
    g5.k = 5;
    Tree t5 = gen(g5);
    CHECK(t5.n == 20);
    CHECK(t5.ordered);
    int leaves = 0;
    for (int v = 0; v < t5.n; ++v)
        if (t5.is_leaf(v)) ++leaves;
    CHECK(leaves == 3 * 5);
    // interior spine degree 5, ends degree 4
    CHECK(t5.degree(4) == 5);
    CHECK(t5.degree(8) == 5);
    CHECK(t5.degree(0) == 4);
    CHECK(t5.degree(16) == 4);
    // 3 leaves then the next spine vertex, same side
    REQUIRE(t5.children[4].size() == 4);
    CHECK(t5.children[4][3] == 8);
}

TEST_CASE("random generator determinism") {
    GenSpec g;
    g.family = TreeFamily::Random;
    g.n = 50;
    g.seed = 1;
    Tree a = gen(g);
    Tree b = gen(g);
    CHECK(a.parent == b.parent);
    g.seed = 2;
    Tree c = gen(g);
    CHECK(a.parent != c.parent);
}

TEST_CASE("generated trees satisfy Tree invariants") {
    for (auto fam : {TreeFamily::Path, TreeFamily::Star, TreeFamily::Kary,
                     TreeFamily::Random}) {
        GenSpec g;
        g.family = fam;
        g.n = 37;
        g.seed = 5;
        g.arity = 3;
        CHECK_NOTHROW(gen(g).validate());
    }
    GenSpec bad;
    bad.family = TreeFamily::Random;
    bad.n = 0;
    CHECK_THROWS_AS(gen(bad), std::invalid_argument);
}

TEST_CASE("spiral demo: base case and validity") {
    auto res = spiral_demo(6);
    REQUIRE(res.rows.size() == 5);  // k = 2..6
    CHECK(res.rows[0].k == 2);
    CHECK(res.rows[0].area_ratio > 0);
    for (size_t i = 0; i < res.rows.size(); ++i) {
        VerifyOptions vo;
        vo.compute_clearance = false;
        auto rep = verify(res.trees[i], res.drawings[i], vo);
        CHECK(rep.resolution.pass);
        CHECK(rep.planarity.pass);
        CHECK(*rep.embedding_ok);
    }
}

TEST_CASE("spiral demo: ratio grows with k") {
    auto res = spiral_demo(9);
    // k vs k+2 strictly increases
    for (size_t i = 0; i + 2 < res.rows.size(); ++i)
        CHECK(res.rows[i + 2].area_ratio > res.rows[i].area_ratio);
}
