#include "qtree/report.hpp"
#include "qtree/search.hpp"

#include <doctest.h>

#include <sstream>

using namespace qtree;

TEST_CASE("json report layout") {
    auto r = search::find_remark35_witnesses(8);
    r.config["note"] = "unit";
    auto j = report::to_json(r);
    CHECK(j["header"]["tool"] == "qtree");
    CHECK(j["header"]["complete"] == true);
    CHECK(j["header"]["config"]["note"] == "unit");
    CHECK(j["mode"] == search::to_string(search::Mode::Remark35));
    CHECK(j["pairs"].size() == r.pairs.size());
    CHECK(j["pairs"][0].contains("constant"));
    CHECK(j["violations"].empty());
}

TEST_CASE("csv report has a header comment and one row per record") {
    auto r = search::find_cospectral_pairs(9);
    auto csv = report::to_csv(r);
    std::istringstream in(csv);
    std::string line;
    std::getline(in, line);
    CHECK(line.rfind("# qtree ", 0) == 0);
    std::getline(in, line);
    CHECK(line.rfind("record,n,index,code", 0) == 0);
    std::size_t rows = 0;
    while (std::getline(in, line)) {
        ++rows;
        CHECK(line.rfind("group-member,", 0) == 0);
    }
    std::size_t members = 0;
    for (const auto& g : r.groups) members += g.members.size();
    CHECK(rows == members);
    auto bare = report::to_csv(r, false);
    CHECK(bare.find("record,n") == std::string::npos);
    CHECK(bare.rfind("group-member,", 0) == 0);
}

TEST_CASE("text report") {
    auto r = search::find_cospectral_pairs(9);
    auto text = report::to_text(r);
    CHECK(text.find("groups:") != std::string::npos);
    r.complete = false;
    CHECK(report::to_text(r).find("INCOMPLETE") != std::string::npos);
}

TEST_CASE("charfn cell") {
    CHECK(report::charfn_cell(CharFn{4, IntPoly{0, -4, 0, 20}}) == "4|0 -4 0 20");
}
