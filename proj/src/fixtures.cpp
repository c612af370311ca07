#include "qtree/fixtures.hpp"

#include "qtree/canon.hpp"
#include "qtree/enumerate.hpp"

#include <array>

namespace qtree::fixtures {

MarkedTree spider_tree() {
    constexpr std::array<int, 5> legs{1, 1, 1, 2, 2};
    return MarkedTree{Tree::spider(legs), 0, 4};
}

MarkedTree twelve_vertex_tree() {
    return MarkedTree{Tree(12, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {1, 5}, {1, 6}, {0, 7}, {7, 8}, {8, 9}, {7, 10}, {7, 11}}),
                      0, 3};
}

std::vector<MarkedTree> search_twelve_vertex_trees() {
    const CharFn target{5, IntPoly{-1, 0, 36, 0, -192, 0, 256}};
    std::vector<MarkedTree> out;
    TreeEnumerator e(12);
    while (auto t = e.next()) {
        const auto inner = t->interior_vertices();
        if (inner.empty() || char_fn(RootedTree(*t, inner.front()), {}) != target) continue;
        const auto orbit = orbit_ids(*t);
        for (std::size_t a = 0; a < inner.size(); ++a) {
            for (std::size_t b = a + 1; b < inner.size(); ++b) {
                const Vertex v1 = inner[a], v2 = inner[b];
                if (t->degree(v1) != 2 || t->degree(v2) != 2) continue;
                if (orbit[static_cast<std::size_t>(v1)] == orbit[static_cast<std::size_t>(v2)]) continue;
                const CharFn d1 = char_fn(RootedTree(*t, v1), {RootCondition::Dirichlet, PendantMode::Dirichlet});
                const CharFn d2 = char_fn(RootedTree(*t, v2), {RootCondition::Dirichlet, PendantMode::Dirichlet});
                if (d1 == d2) out.push_back(MarkedTree{*t, v1, v2});
            }
        }
    }
    return out;
}

namespace {

std::string describe(const CharFn& f) { return "s^" + std::to_string(f.s_exp) + " * (" + f.poly.to_string() + ")"; }

FixtureCheck expect_equal(std::string name, const CharFn& got, const CharFn& want) {
    const bool ok = got == want;
    return {std::move(name), ok, ok ? describe(got) : "got " + describe(got) + ", want " + describe(want)};
}

}  // namespace

std::vector<FixtureCheck> run_fixtures() {
    std::vector<FixtureCheck> out;
    const CharPair p2 = char_pair(RootedTree(Tree::path(2), 0), PendantMode::Dirichlet);
    const CharPair p3 = char_pair(RootedTree(Tree::path(3), 0), PendantMode::Dirichlet);

    // twelve-vertex base tree
    {
        const auto m = twelve_vertex_tree();
        const CharPair at1 = char_pair(RootedTree(m.tree, m.v1), PendantMode::Dirichlet);
        const CharPair at2 = char_pair(RootedTree(m.tree, m.v2), PendantMode::Dirichlet);
        const CharFn neumann{5, IntPoly{-1, 0, 36, 0, -192, 0, 256}};
        const CharFn glued_p2{6, IntPoly{-1, 0, 42, 0, -256, 0, 384}};
        const CharFn glued_p3{6, IntPoly{0, -8, 0, 148, 0, -640, 0, 768}};
        out.push_back(expect_equal("twelve-vertex neumann at v1", at1.neumann, neumann));
        out.push_back(expect_equal("twelve-vertex neumann at v2", at2.neumann, neumann));
        out.push_back(expect_equal("twelve-vertex glue P2 at v1", attach_char_fn(at1, p2), glued_p2));
        out.push_back(expect_equal("twelve-vertex glue P2 at v2", attach_char_fn(at2, p2), glued_p2));
        out.push_back(expect_equal("twelve-vertex glue P2 at v1 (direct)",
                                   tree_char_fn(attach(m.tree, m.v1, RootedTree(Tree::path(2), 0)), PendantMode::Dirichlet),
                                   glued_p2));
        out.push_back(expect_equal("twelve-vertex glue P2 at v2 (direct)",
                                   tree_char_fn(attach(m.tree, m.v2, RootedTree(Tree::path(2), 0)), PendantMode::Dirichlet),
                                   glued_p2));
        out.push_back(expect_equal("twelve-vertex recovered dirichlet", recover_dirichlet_charfn(glued_p2, neumann, p2),
                                   CharFn{6, IntPoly{0, 6, 0, -64, 0, 128}}));
        out.push_back(expect_equal("twelve-vertex glue P3 at v1", attach_char_fn(at1, p3), glued_p3));
        out.push_back(expect_equal("twelve-vertex glue P3 at v2", attach_char_fn(at2, p3), glued_p3));
        const bool eq = m_equivalent(m.tree, m.v1, m.v2, PendantMode::Dirichlet);
        out.push_back({"twelve-vertex equal scattering at v1, v2", eq, eq ? "m_equivalent" : "pairs differ"});
    }

    // the spider
    {
        const auto m = spider_tree();
        const CharPair at1 = char_pair(RootedTree(m.tree, m.v1), PendantMode::Dirichlet);
        const CharPair at2 = char_pair(RootedTree(m.tree, m.v2), PendantMode::Dirichlet);
        out.push_back(expect_equal("spider neumann at v1", at1.neumann, CharFn{4, IntPoly{0, -4, 0, 20}}));
        out.push_back(expect_equal("spider neumann at v2", at2.neumann, CharFn{4, IntPoly{0, -4, 0, 20}}));
        out.push_back(expect_equal("spider dirichlet at v1", at1.dirichlet, CharFn{5, IntPoly{0, 0, 4}}));
        out.push_back(expect_equal("spider dirichlet at v2", at2.dirichlet, CharFn{5, IntPoly{-1, 0, 10}}));
        const CharFn g1 = attach_char_fn(at1, p2);
        const CharFn g2 = attach_char_fn(at2, p2);
        out.push_back(expect_equal("spider glue P2 at v1", g1, CharFn{5, IntPoly{0, -4, 0, 24}}));
        out.push_back(expect_equal("spider glue P2 at v2", g2, CharFn{5, IntPoly{0, -5, 0, 30}}));
        const bool cos = cospectral(g1, g2);
        out.push_back({"spider glued trees cospectral", cos, cos ? "yes" : "no"});
        const bool eq = m_equivalent(m.tree, m.v1, m.v2, PendantMode::Dirichlet);
        out.push_back({"spider scattering differs", !eq, eq ? "unexpectedly m_equivalent" : "pairs differ"});
        if (cos) {
            const auto lemma = lemma32_check(g1, g2, 1, m.tree.degree(m.v1), m.tree.degree(m.v2));
            const bool ok = lemma.holds && lemma.constant == Rational(4, 5);
            out.push_back({"spider glue constant 4/5", ok, "C=" + lemma.constant.get_str()});
        }
    }
    return out;
}

}  // namespace qtree::fixtures
