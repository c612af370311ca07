#include "oracles.hpp"
#include "qtree/errors.hpp"
#include "qtree/fixtures.hpp"
#include "qtree/report.hpp"
#include "qtree/search.hpp"

#include <doctest.h>

using namespace qtree;
using namespace qtree::search;

namespace {

SearchOptions with_mode(PendantMode m) {
    SearchOptions o;
    o.pendant_mode = m;
    return o;
}

std::vector<std::string> pair_keys(const SearchReport& r) {
    std::vector<std::string> out;
    for (const auto& p : r.pairs)
        out.push_back(std::to_string(p.tree.n) + ":" + std::to_string(p.tree.index) + ":" + std::to_string(p.v1) +
                      "-" + std::to_string(p.v2));
    return out;
}

}  // namespace

TEST_CASE("shard parsing") {
    auto s = parse_shard("2/5");
    CHECK(s.index == 2);
    CHECK(s.count == 5);
    CHECK_THROWS_AS(parse_shard("5/5"), InputError);
    CHECK_THROWS_AS(parse_shard("1"), InputError);
    CHECK_THROWS_AS(parse_shard("a/b"), InputError);
    CHECK_THROWS_AS(parse_shard("0/0"), InputError);
}

TEST_CASE("no cospectral trees below nine vertices") {
    for (int n = 2; n <= 8; ++n) {
        CHECK(find_cospectral_pairs(n, with_mode(PendantMode::Neumann)).groups.empty());
        CHECK(find_cospectral_pairs(n, with_mode(PendantMode::Dirichlet)).groups.empty());
    }
}

TEST_CASE("cospectral groups at nine vertices") {
    auto r = find_cospectral_pairs(9, with_mode(PendantMode::Neumann));
    REQUIRE(r.groups.size() == 1);
    const auto& g = r.groups[0];
    REQUIRE(g.members.size() == 2);
    // the two members really are different trees with the same function
    Tree a(9, g.members[0].edges);
    Tree b(9, g.members[1].edges);
    CHECK_FALSE(oracle::isomorphic_by_permutation(a, b));
    auto fa = oracle::char_fn(a, -1, false, false);
    auto fb = oracle::char_fn(b, -1, false, false);
    CHECK(cospectral(CharFn{fa.e, fa.p}, CharFn{fb.e, fb.p}));
    CHECK(r.stats.at("trees") == 47);
}

TEST_CASE("sharding is rejected for group searches") {
    SearchOptions o;
    o.shard = {1, 2};
    CHECK_THROWS_AS(find_cospectral_pairs(9, o), InputError);
}

TEST_CASE("equal scattering pairs on the twelve-vertex tree") {
    auto m = fixtures::twelve_vertex_tree();
    auto r = find_equal_m_vertex_pairs(m.tree);
    CHECK(r.violations.empty());
    bool found = false;
    for (const auto& p : r.pairs) {
        if ((p.v1 == m.v1 && p.v2 == m.v2) || (p.v1 == m.v2 && p.v2 == m.v1)) {
            found = true;
            CHECK(p.pair1 == p.pair2);
            CHECK(p.attached1 == p.attached2);
        }
    }
    CHECK(found);
}

TEST_CASE("threads and shards do not change results") {
    SearchOptions base;
    auto ref = find_equal_m_vertex_pairs(10, base);
    SearchOptions threaded;
    threaded.jobs = 4;
    CHECK(pair_keys(find_equal_m_vertex_pairs(10, threaded)) == pair_keys(ref));
    std::vector<std::string> joined;
    for (int i = 0; i < 3; ++i) {
        SearchOptions o;
        o.shard = {i, 3};
        auto part = pair_keys(find_equal_m_vertex_pairs(10, o));
        joined.insert(joined.end(), part.begin(), part.end());
    }
    CHECK(joined == pair_keys(ref));
}

TEST_CASE("cancellation marks the report incomplete") {
    std::atomic<bool> stop{true};
    SearchOptions o;
    o.cancel = &stop;
    auto r = verify_theorems(9, default_attach_family(), o);
    CHECK_FALSE(r.complete);
    CHECK(report::to_json(r)["header"]["complete"] == false);
}

TEST_CASE("theorem verification up to eight vertices") {
    auto r = verify_theorems(8, default_attach_family());
    CHECK(r.complete);
    CHECK(r.violations.empty());
    CHECK(r.stats.at("equal_pairs") > 0);
    CHECK(r.stats.at("family_checks") == r.stats.at("equal_pairs") * default_attach_family().size());
}

TEST_CASE("unequal-degree witnesses") {
    CHECK(find_remark35_witnesses(5).pairs.empty());
    auto r = find_remark35_witnesses(8);
    CHECK(r.violations.empty());
    REQUIRE_FALSE(r.pairs.empty());
    bool spider = false;
    for (const auto& p : r.pairs) {
        CHECK(p.d1 != p.d2);
        REQUIRE(p.constant.has_value());
        Rational predicted((p.d1 + 1) * p.d2, p.d1 * (p.d2 + 1));
        predicted.canonicalize();
        CHECK(*p.constant == predicted);
        if (*p.constant == Rational(4, 5)) spider = true;
    }
    CHECK(spider);
    auto single = find_remark35_witnesses(fixtures::spider_tree().tree);
    CHECK(single.pairs.size() == 2);
}

TEST_CASE("P2 attachment helper") {
    auto m = fixtures::spider_tree();
    CHECK(p2_attachments_cospectral(m.tree, m.v1, m.v2, PendantMode::Dirichlet));
    CHECK_FALSE(p2_attachments_cospectral(m.tree, m.v1, 1, PendantMode::Dirichlet));
}

TEST_CASE("default family") {
    auto fam = default_attach_family();
    CHECK(fam.size() == 5);
    CHECK(family_member_name(fam[0]) == "n2:1100");
}
