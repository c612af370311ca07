#include "oracles.hpp"
#include "qtree/enumerate.hpp"
#include "qtree/fixtures.hpp"
#include "qtree/invariants.hpp"

#include <doctest.h>

using qtree::IntPoly;
using qtree::PendantMode;

TEST_CASE("root range") {
    CHECK(qtree::check_root_range(IntPoly{0, -4, 0, 20}).ok);
    CHECK_FALSE(qtree::check_root_range(IntPoly{-4, 0, 1}).ok);  // roots +-2
    CHECK_FALSE(qtree::check_root_range(IntPoly{1, 0, 1}).ok);   // complex roots
}

TEST_CASE("parity") {
    CHECK(qtree::check_parity(IntPoly{0, -4, 0, 20}).ok);
    CHECK(qtree::check_parity(IntPoly{-1, 0, 10}).ok);
    CHECK_FALSE(qtree::check_parity(IntPoly{1, 1}).ok);
}

TEST_CASE("interlacing on a known pair") {
    auto m = qtree::fixtures::spider_tree();
    auto pair = qtree::char_pair(qtree::RootedTree(m.tree, m.v2), PendantMode::Dirichlet);
    CHECK(qtree::check_interlacing(pair).ok);
    qtree::CharPair bad{{0, IntPoly{-1, 0, 2}}, {1, IntPoly{-1, 0, 8}}};
    CHECK_FALSE(qtree::check_interlacing(bad).ok);
}

TEST_CASE("leading coefficient detects a tampered function") {
    qtree::RootedTree rt(qtree::Tree::star(3), 0);
    const qtree::ProblemSpec spec{};
    auto f = qtree::char_fn(rt, spec);
    CHECK(qtree::check_leading_coefficient(rt, spec, f).ok);
    f.poly = IntPoly{0, 4};
    CHECK_FALSE(qtree::check_leading_coefficient(rt, spec, f).ok);
}

TEST_CASE("all invariants hold on every rooted tree up to eight vertices") {
    for (int n = 2; n <= 8; ++n) {
        for (const auto& t : qtree::enumerate_trees(n)) {
            for (int v = 0; v < n; ++v) {
                qtree::RootedTree rt(t, v);
                auto pair = qtree::char_pair(rt, PendantMode::Dirichlet);
                auto r = qtree::check_all(rt, PendantMode::Dirichlet, pair);
                CAPTURE(r.detail);
                CHECK(r.ok);
            }
        }
    }
}
