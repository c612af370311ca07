#include "oracles.hpp"
#include "qtree/errors.hpp"
#include "qtree/fixtures.hpp"
#include "qtree/spectral.hpp"

#include <doctest.h>

using qtree::CharFn;
using qtree::IntPoly;
using qtree::PendantMode;
using qtree::ProblemSpec;
using qtree::RootCondition;
using qtree::RootedTree;
using qtree::Tree;

namespace {

constexpr ProblemSpec kNeumann{RootCondition::Neumann, PendantMode::Dirichlet};
constexpr ProblemSpec kDirichlet{RootCondition::Dirichlet, PendantMode::Dirichlet};

CharFn ref(const Tree& t, int root, const ProblemSpec& spec) {
    auto r = oracle::char_fn(t, root, spec.root == RootCondition::Dirichlet,
                             spec.pendants == PendantMode::Dirichlet);
    return {r.e, r.p};
}

}  // namespace

TEST_CASE("small hand cases") {
    RootedTree p2(Tree::path(2), 0);
    CHECK(qtree::char_fn(p2, kNeumann) == CharFn{0, IntPoly{0, 1}});
    CHECK(qtree::char_fn(p2, kDirichlet) == CharFn{1, IntPoly{1}});
    RootedTree star(Tree::star(3), 0);
    CHECK(qtree::char_fn(star, kNeumann) == CharFn{2, IntPoly{0, 3}});
    CHECK(qtree::char_fn(star, kDirichlet) == CharFn{3, IntPoly{1}});
    RootedTree p3(Tree::path(3), 0);
    CHECK(qtree::char_fn(p3, kNeumann) == CharFn{0, IntPoly{-1, 0, 2}});
    CHECK(qtree::char_fn(p3, kDirichlet) == CharFn{1, IntPoly{0, 2}});
    CHECK_THROWS_AS(qtree::char_fn(RootedTree(Tree::singleton(), 0), kNeumann), qtree::InputError);
}

TEST_CASE("dirichlet set") {
    RootedTree rt(Tree::path(4), 0);
    CHECK(qtree::dirichlet_set(rt, kNeumann) == std::vector<int>{3});
    CHECK(qtree::dirichlet_set(rt, kDirichlet) == std::vector<int>{0, 3});
    CHECK(qtree::dirichlet_set(rt, {RootCondition::Neumann, PendantMode::Neumann}).empty());
}

TEST_CASE("char_fn agrees with the cofactor oracle") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 120; ++trial) {
        const int n = 2 + trial % 7;
        auto t = oracle::random_tree(n, rng);
        const int root = static_cast<int>(rng() % n);
        for (auto spec : {kNeumann, kDirichlet, ProblemSpec{RootCondition::Neumann, PendantMode::Neumann},
                          ProblemSpec{RootCondition::Dirichlet, PendantMode::Neumann}}) {
            CHECK(qtree::char_fn(RootedTree(t, root), spec) == ref(t, root, spec));
        }
    }
}

TEST_CASE("spider polynomials") {
    auto m = qtree::fixtures::spider_tree();
    auto n1 = qtree::char_fn(RootedTree(m.tree, m.v1), kNeumann);
    auto n2 = qtree::char_fn(RootedTree(m.tree, m.v2), kNeumann);
    CHECK(n1 == CharFn{4, IntPoly{0, -4, 0, 20}});
    CHECK(n2 == n1);
    CHECK(qtree::char_fn(RootedTree(m.tree, m.v1), kDirichlet) == CharFn{5, IntPoly{0, 0, 4}});
    CHECK(qtree::char_fn(RootedTree(m.tree, m.v2), kDirichlet) == CharFn{5, IntPoly{-1, 0, 10}});
    CHECK_FALSE(qtree::m_equivalent(m.tree, m.v1, m.v2, PendantMode::Dirichlet));
}

TEST_CASE("CharFn algebra") {
    CharFn a{2, IntPoly{1, 1}};
    CharFn b{3, IntPoly{0, 2}};
    CHECK(qtree::mul(a, b) == CharFn{5, IntPoly{0, 2, 2}});
    CHECK(qtree::add(a, CharFn{2, IntPoly{1}}) == CharFn{2, IntPoly{2, 1}});
    CHECK(qtree::sub(a, a).poly.is_zero());
    CHECK_THROWS_AS(qtree::add(a, b), qtree::ExponentMismatch);
    CHECK_THROWS_AS(qtree::sub(a, b), qtree::ExponentMismatch);
}

TEST_CASE("gluing at the root equals direct computation") {
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 150; ++trial) {
        auto t0 = oracle::random_tree(2 + trial % 6, rng);
        auto t1 = oracle::random_tree(2 + trial % 4, rng);
        const int v = static_cast<int>(rng() % t0.size());
        const int r = static_cast<int>(rng() % t1.size());
        RootedTree att(t1, r);
        auto merged = qtree::attach(t0, v, att);
        for (auto mode : {PendantMode::Dirichlet, PendantMode::Neumann}) {
            auto base = qtree::char_pair(RootedTree(t0, v), mode);
            auto other = qtree::char_pair(att, mode);
            // combination is only defined when no side has a zero function
            if (base.neumann.poly.is_zero() || other.neumann.poly.is_zero() || base.dirichlet.poly.is_zero() ||
                other.dirichlet.poly.is_zero())
                continue;
            auto direct = qtree::char_pair(RootedTree(merged, v), mode);
            CHECK(qtree::combine_at_root(base, other) == direct);
            CHECK(qtree::attach_char_fn(base, other) == direct.neumann);
        }
    }
}

TEST_CASE("recover the Dirichlet function from a gluing") {
    auto m = qtree::fixtures::twelve_vertex_tree();
    RootedTree p2(Tree::path(2), 0);
    auto att = qtree::char_pair(p2, PendantMode::Dirichlet);
    auto base_n = qtree::char_fn(RootedTree(m.tree, m.v1), kNeumann);
    auto merged = qtree::attach_char_fn(qtree::char_pair(RootedTree(m.tree, m.v1), PendantMode::Dirichlet), att);
    auto d = qtree::recover_dirichlet_charfn(merged, base_n, att);
    CHECK(d == CharFn{6, IntPoly{0, 6, 0, -64, 0, 128}});
    CHECK(d == qtree::char_fn(RootedTree(m.tree, m.v1), kDirichlet));
}

TEST_CASE("cospectrality ignores sign and content") {
    CHECK(qtree::cospectral(CharFn{3, IntPoly{0, 2, 4}}, CharFn{3, IntPoly{0, -1, -2}}));
    CHECK_FALSE(qtree::cospectral(CharFn{3, IntPoly{0, 2, 4}}, CharFn{2, IntPoly{0, 1, 2}}));
    CHECK_FALSE(qtree::cospectral(CharFn{3, IntPoly{0, 2, 4}}, CharFn{3, IntPoly{0, 2, 3}}));
}

TEST_CASE("glue constant") {
    auto m = qtree::fixtures::spider_tree();
    RootedTree p2(Tree::path(2), 0);
    auto att = qtree::char_pair(p2, PendantMode::Dirichlet);
    auto f1 = qtree::attach_char_fn(qtree::char_pair(RootedTree(m.tree, m.v1), PendantMode::Dirichlet), att);
    auto f2 = qtree::attach_char_fn(qtree::char_pair(RootedTree(m.tree, m.v2), PendantMode::Dirichlet), att);
    auto r = qtree::lemma32_check(f1, f2, 1, m.tree.degree(m.v1), m.tree.degree(m.v2));
    CHECK(r.holds);
    CHECK(r.constant == qtree::Rational(4, 5));
    CHECK(r.predicted == qtree::Rational(4, 5));
    CHECK_FALSE(r.identical);
    CHECK_THROWS_AS(qtree::lemma32_check(f1, CharFn{5, IntPoly{0, 1}}, 1, 5, 2), qtree::PreconditionError);
}

TEST_CASE("equal scattering data on the twelve-vertex tree") {
    auto m = qtree::fixtures::twelve_vertex_tree();
    CHECK(qtree::m_equivalent(m.tree, m.v1, m.v2, PendantMode::Dirichlet));
    CHECK_THROWS_AS(qtree::m_equivalent(m.tree, 1, 1, PendantMode::Dirichlet), qtree::InputError);
}

TEST_CASE("mode names") {
    CHECK(qtree::parse_pendant_mode("neumann") == PendantMode::Neumann);
    CHECK(qtree::parse_root_condition("dirichlet") == RootCondition::Dirichlet);
    CHECK_THROWS_AS(qtree::parse_pendant_mode("robin"), qtree::InputError);
    CHECK(qtree::to_string(PendantMode::Dirichlet) == "dirichlet");
}
