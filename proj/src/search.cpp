#include "qtree/search.hpp"

#include "qtree/canon.hpp"
#include "qtree/enumerate.hpp"
#include "qtree/errors.hpp"

#include <algorithm>
#include <functional>
#include <thread>

namespace qtree::search {

std::string to_string(Mode m) {
    switch (m) {
        case Mode::CospectralPairs: return "cospectral-pairs";
        case Mode::EqualM: return "equal-m";
        case Mode::TheoremVerify: return "theorem-verify";
        case Mode::Remark35: return "remark35";
    }
    return "unknown";
}

Shard parse_shard(const std::string& s) {
    const auto slash = s.find('/');
    if (slash == std::string::npos) throw InputError("shard: expected i/k, got '" + s + "'");
    Shard sh;
    try {
        sh.index = std::stoi(s.substr(0, slash));
        sh.count = std::stoi(s.substr(slash + 1));
    } catch (const std::exception&) {
        throw InputError("shard: expected i/k, got '" + s + "'");
    }
    if (sh.count < 1 || sh.index < 0 || sh.index >= sh.count) {
        throw InputError("shard: need 0 <= i < k, got '" + s + "'");
    }
    return sh;
}

std::vector<RootedTree> default_attach_family() {
    return {RootedTree(Tree::path(2), 0), RootedTree(Tree::path(3), 0), RootedTree(Tree::path(4), 0),
            RootedTree(Tree::star(3), 1), RootedTree(Tree::star(3), 0)};
}

std::string family_member_name(const RootedTree& rt) {
    return "n" + std::to_string(rt.tree.size()) + ":" + canon_code(rt).to_string();
}

bool p2_attachments_cospectral(const Tree& t, Vertex v1, Vertex v2, PendantMode mode) {
    const RootedTree p2(Tree::path(2), 0);
    return cospectral(tree_char_fn(attach(t, v1, p2), mode), tree_char_fn(attach(t, v2, p2), mode));
}

namespace {

struct Item {
    TreeRef ref;
    Tree tree;
};

TreeRef make_ref(const Tree& t, std::uint64_t index) {
    return TreeRef{t.size(), index, canon_code(t).to_string(), t.edges()};
}

// Trees with n_min <= n <= n_max in (n, index) order, restricted to the shard.
std::vector<Item> collect_items(int n_min, int n_max, const SearchOptions& opts) {
    std::vector<std::pair<int, std::uint64_t>> sizes;
    std::uint64_t total = 0;
    for (int n = n_min; n <= n_max; ++n) {
        const std::uint64_t c = count_trees(n, opts.max_n);
        sizes.emplace_back(n, c);
        total += c;
    }
    const auto k = static_cast<std::uint64_t>(opts.shard.count);
    const auto i = static_cast<std::uint64_t>(opts.shard.index);
    const std::uint64_t begin = total * i / k;
    const std::uint64_t end = total * (i + 1) / k;
    std::vector<Item> items;
    std::uint64_t offset = 0;
    for (const auto& [n, c] : sizes) {
        const std::uint64_t lo = std::max(begin, offset);
        const std::uint64_t hi = std::min(end, offset + c);
        if (lo < hi) {
            std::uint64_t idx = lo - offset;
            for (auto& t : enumerate_trees_range(n, lo - offset, hi - offset, opts.max_n)) {
                Item it{make_ref(t, idx++), std::move(t)};
                items.push_back(std::move(it));
            }
        }
        offset += c;
    }
    return items;
}

struct TreeScan {
    std::vector<PairRecord> pairs;
    std::vector<Violation> violations;
    std::map<std::string, std::uint64_t> stats;
};

// Runs `scan` over items with a worker pool; results stay in item order.
std::vector<std::optional<TreeScan>> run_pool(const std::vector<Item>& items, const SearchOptions& opts,
                                              const std::function<TreeScan(const Item&)>& scan) {
    std::vector<std::optional<TreeScan>> out(items.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        while (true) {
            if (opts.cancel && opts.cancel->load()) return;
            const std::size_t i = next.fetch_add(1);
            if (i >= items.size()) return;
            out[i] = scan(items[i]);
        }
    };
    const int jobs = std::max(1, opts.jobs);
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    return out;
}

void merge_into(SearchReport& report, std::vector<std::optional<TreeScan>>&& results) {
    for (auto& r : results) {
        if (!r) {
            report.complete = false;
            continue;
        }
        report.stats["trees"] += 1;
        for (auto& p : r->pairs) report.pairs.push_back(std::move(p));
        for (auto& v : r->violations) report.violations.push_back(std::move(v));
        for (const auto& [k, v] : r->stats) report.stats[k] += v;
    }
    report.stats["records"] = report.pairs.size() + report.groups.size();
    report.stats["violations"] = report.violations.size();
}

SearchReport make_report(Mode mode, int n_min, int n_max, const SearchOptions& opts) {
    SearchReport r;
    r.mode = mode;
    r.n_min = n_min;
    r.n_max = n_max;
    r.pendant_mode = opts.pendant_mode;
    r.config["mode"] = to_string(mode);
    r.config["n_min"] = n_min;
    r.config["n_max"] = n_max;
    r.config["pendant_mode"] = to_string(opts.pendant_mode);
    r.config["shard"] = std::to_string(opts.shard.index) + "/" + std::to_string(opts.shard.count);
    r.config["include_pendant_roots"] = opts.include_pendant_roots;
    r.stats["trees"] = 0;
    return r;
}

// Per-vertex data shared by the pair scans.
struct VertexData {
    std::vector<Vertex> candidates;
    std::vector<int> orbit;
    std::vector<std::optional<CharPair>> pair;
    std::vector<std::optional<CharFn>> glued_p2;
};

VertexData vertex_data(const Tree& t, PendantMode mode, bool include_pendants) {
    VertexData d;
    d.orbit = orbit_ids(t);
    d.pair.resize(static_cast<std::size_t>(t.size()));
    d.glued_p2.resize(static_cast<std::size_t>(t.size()));
    const RootedTree p2(Tree::path(2), 0);
    for (Vertex v = 0; v < t.size(); ++v) {
        if (!(t.is_interior(v) || (include_pendants && t.is_pendant(v)))) continue;
        d.candidates.push_back(v);
        d.pair[static_cast<std::size_t>(v)] = char_pair(RootedTree(t, v), mode);
        d.glued_p2[static_cast<std::size_t>(v)] = tree_char_fn(attach(t, v, p2), mode);
    }
    return d;
}

PairRecord make_pair_record(const Item& item, const VertexData& d, Vertex v1, Vertex v2) {
    PairRecord rec;
    rec.tree = item.ref;
    rec.v1 = v1;
    rec.v2 = v2;
    rec.d1 = item.tree.degree(v1);
    rec.d2 = item.tree.degree(v2);
    rec.pair1 = *d.pair[static_cast<std::size_t>(v1)];
    rec.pair2 = *d.pair[static_cast<std::size_t>(v2)];
    rec.attached1 = *d.glued_p2[static_cast<std::size_t>(v1)];
    rec.attached2 = *d.glued_p2[static_cast<std::size_t>(v2)];
    return rec;
}

TreeScan scan_equal_m(const Item& item, const SearchOptions& opts) {
    TreeScan out;
    const Tree& t = item.tree;
    const VertexData d = vertex_data(t, opts.pendant_mode, opts.include_pendant_roots);
    for (std::size_t a = 0; a < d.candidates.size(); ++a) {
        for (std::size_t b = a + 1; b < d.candidates.size(); ++b) {
            const Vertex v1 = d.candidates[a], v2 = d.candidates[b];
            const auto i1 = static_cast<std::size_t>(v1), i2 = static_cast<std::size_t>(v2);
            out.stats["pairs_considered"] += 1;
            if (t.degree(v1) != t.degree(v2)) {
                out.stats["degree_filtered"] += 1;
                continue;
            }
            const bool direct = *d.pair[i1] == *d.pair[i2];
            if (d.orbit[i1] == d.orbit[i2]) {
                out.stats["orbit_pairs"] += 1;
                if (!direct) {
                    out.violations.push_back({item.ref, v1, v2, "orbit",
                                              "automorphic vertices with different characteristic pairs"});
                }
                continue;
            }
            const bool fast = cospectral(*d.glued_p2[i1], *d.glued_p2[i2]);
            if (fast != direct) {
                out.violations.push_back({item.ref, v1, v2, "fast-vs-direct",
                                          std::string("P_2 criterion says ") + (fast ? "equal" : "different") +
                                              ", characteristic pairs say " + (direct ? "equal" : "different")});
                continue;
            }
            if (fast) {
                out.stats["equal_m_pairs"] += 1;
                out.pairs.push_back(make_pair_record(item, d, v1, v2));
            }
        }
    }
    return out;
}

TreeScan scan_verify(const Item& item, const SearchOptions& opts, const std::vector<RootedTree>& family,
                     const std::vector<CharPair>& family_pairs) {
    TreeScan out;
    const Tree& t = item.tree;
    const VertexData d = vertex_data(t, opts.pendant_mode, false);
    const RootedTree p2(Tree::path(2), 0);
    for (std::size_t a = 0; a < d.candidates.size(); ++a) {
        for (std::size_t b = a + 1; b < d.candidates.size(); ++b) {
            const Vertex v1 = d.candidates[a], v2 = d.candidates[b];
            const auto i1 = static_cast<std::size_t>(v1), i2 = static_cast<std::size_t>(v2);
            const int d1 = t.degree(v1), d2 = t.degree(v2);
            out.stats["pairs_considered"] += 1;
            const CharFn& g1 = *d.glued_p2[i1];
            const CharFn& g2 = *d.glued_p2[i2];
            const bool attached_cospectral = cospectral(g1, g2);
            const bool fast = attached_cospectral && d1 == d2;
            const bool direct = *d.pair[i1] == *d.pair[i2];
            if (fast != direct) {
                out.violations.push_back({item.ref, v1, v2, "biconditional",
                                          std::string("fast=") + (fast ? "true" : "false") +
                                              " direct=" + (direct ? "true" : "false")});
            }
            if (attached_cospectral) {
                out.stats["cospectral_attachments"] += 1;
                const auto lemma = lemma32_check(g1, g2, 1, d1, d2);
                if (!lemma.holds || lemma.identical != (d1 == d2)) {
                    out.violations.push_back({item.ref, v1, v2, "glue-constant",
                                              "C=" + lemma.constant.get_str() + " predicted " +
                                                  lemma.predicted.get_str()});
                }
            }
            if (!direct) continue;
            out.stats["equal_pairs"] += 1;
            if (d.orbit[i1] == d.orbit[i2]) {
                out.stats["orbit_pairs"] += 1;
            } else {
                out.pairs.push_back(make_pair_record(item, d, v1, v2));
            }
            for (std::size_t f = 0; f < family.size(); ++f) {
                out.stats["family_checks"] += 1;
                const CharFn s1 = attach_char_fn(*d.pair[i1], family_pairs[f]);
                const CharFn s2 = attach_char_fn(*d.pair[i2], family_pairs[f]);
                if (s1 != s2) {
                    out.violations.push_back({item.ref, v1, v2, "attach-identical",
                                              "family member " + family_member_name(family[f])});
                    continue;
                }
                const Tree t1 = attach(t, v1, family[f]);
                const Tree t2 = attach(t, v2, family[f]);
                const CharFn direct1 = char_fn(RootedTree(t1, v1), {RootCondition::Neumann, opts.pendant_mode});
                const CharFn direct2 = char_fn(RootedTree(t2, v2), {RootCondition::Neumann, opts.pendant_mode});
                if (direct1 != s1 || direct2 != s2) {
                    out.violations.push_back({item.ref, v1, v2, "surgery-vs-direct",
                                              "family member " + family_member_name(family[f])});
                }
            }
        }
    }
    return out;
}

TreeScan scan_remark35(const Item& item, const SearchOptions& opts) {
    TreeScan out;
    const Tree& t = item.tree;
    const VertexData d = vertex_data(t, opts.pendant_mode, opts.include_pendant_roots);
    for (std::size_t a = 0; a < d.candidates.size(); ++a) {
        for (std::size_t b = a + 1; b < d.candidates.size(); ++b) {
            const Vertex v1 = d.candidates[a], v2 = d.candidates[b];
            const auto i1 = static_cast<std::size_t>(v1), i2 = static_cast<std::size_t>(v2);
            const int d1 = t.degree(v1), d2 = t.degree(v2);
            if (d1 == d2) continue;
            out.stats["pairs_considered"] += 1;
            const CharFn& g1 = *d.glued_p2[i1];
            const CharFn& g2 = *d.glued_p2[i2];
            if (!cospectral(g1, g2)) continue;
            const auto lemma = lemma32_check(g1, g2, 1, d1, d2);
            if (g1 == g2 || !lemma.holds) {
                out.violations.push_back({item.ref, v1, v2, "glue-constant",
                                          "unequal degrees but C=" + lemma.constant.get_str()});
                continue;
            }
            PairRecord rec = make_pair_record(item, d, v1, v2);
            rec.constant = lemma.constant;
            out.pairs.push_back(std::move(rec));
        }
    }
    return out;
}

void check_n(int n, int lo, const SearchOptions& opts, const char* what) {
    if (n < lo || n > opts.max_n) {
        throw InputError(std::string(what) + ": n must be in [" + std::to_string(lo) + ", " +
                         std::to_string(opts.max_n) + "], got " + std::to_string(n));
    }
}

}  // namespace

SearchReport find_cospectral_pairs(int n, const SearchOptions& opts) {
    check_n(n, 2, opts, "find_cospectral_pairs");
    if (opts.shard.count != 1) throw InputError("find_cospectral_pairs: grouping needs every tree; sharding is not supported");
    SearchReport report = make_report(Mode::CospectralPairs, n, n, opts);
    const auto items = collect_items(n, n, opts);
    std::vector<std::optional<CharFn>> keys(items.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        while (true) {
            if (opts.cancel && opts.cancel->load()) return;
            const std::size_t i = next.fetch_add(1);
            if (i >= items.size()) return;
            const CharFn f = tree_char_fn(items[i].tree, opts.pendant_mode);
            keys[i] = CharFn{f.s_exp, primitive_normalize(f.poly)};
        }
    };
    if (opts.jobs <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int j = 0; j < opts.jobs; ++j) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    report.stats["cospectral_pairs"] = 0;
    // Group in order of first appearance.
    std::map<std::pair<int, std::vector<std::string>>, std::size_t> slot;
    std::vector<CospectralGroup> all;
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (!keys[i]) {
            report.complete = false;
            continue;
        }
        report.stats["trees"] += 1;
        auto key = std::make_pair(keys[i]->s_exp, keys[i]->poly.to_decimal_strings());
        auto [it, inserted] = slot.try_emplace(key, all.size());
        if (inserted) all.push_back(CospectralGroup{n, *keys[i], {}});
        all[it->second].members.push_back(items[i].ref);
    }
    for (auto& g : all) {
        if (g.members.size() >= 2) {
            report.stats["cospectral_pairs"] += g.members.size() * (g.members.size() - 1) / 2;
            report.groups.push_back(std::move(g));
        }
    }
    report.stats["groups"] = report.groups.size();
    report.stats["records"] = report.groups.size();
    report.stats["violations"] = 0;
    return report;
}

SearchReport find_equal_m_vertex_pairs(int n, const SearchOptions& opts) {
    check_n(n, 4, opts, "find_equal_m_vertex_pairs");
    SearchReport report = make_report(Mode::EqualM, n, n, opts);
    const auto items = collect_items(n, n, opts);
    merge_into(report, run_pool(items, opts, [&](const Item& it) { return scan_equal_m(it, opts); }));
    return report;
}

SearchReport find_equal_m_vertex_pairs(const Tree& t, const SearchOptions& opts) {
    SearchReport report = make_report(Mode::EqualM, t.size(), t.size(), opts);
    const std::vector<Item> items{Item{make_ref(t, 0), t}};
    merge_into(report, run_pool(items, opts, [&](const Item& it) { return scan_equal_m(it, opts); }));
    return report;
}

SearchReport verify_theorems(int n_max, const std::vector<RootedTree>& family, const SearchOptions& opts) {
    check_n(n_max, 2, opts, "verify_theorems");
    if (family.empty()) throw InputError("verify_theorems: attach family must not be empty");
    std::vector<CharPair> family_pairs;
    for (const auto& f : family) family_pairs.push_back(char_pair(f, opts.pendant_mode));
    SearchReport report = make_report(Mode::TheoremVerify, 2, n_max, opts);
    nlohmann::ordered_json names = nlohmann::ordered_json::array();
    for (const auto& f : family) names.push_back(family_member_name(f));
    report.config["family"] = names;
    const auto items = collect_items(2, n_max, opts);
    merge_into(report,
               run_pool(items, opts, [&](const Item& it) { return scan_verify(it, opts, family, family_pairs); }));
    return report;
}

SearchReport find_remark35_witnesses(int n_max, const SearchOptions& opts) {
    check_n(n_max, 2, opts, "find_remark35_witnesses");
    SearchReport report = make_report(Mode::Remark35, 2, n_max, opts);
    const auto items = collect_items(2, n_max, opts);
    merge_into(report, run_pool(items, opts, [&](const Item& it) { return scan_remark35(it, opts); }));
    return report;
}

SearchReport find_remark35_witnesses(const Tree& t, const SearchOptions& opts) {
    SearchReport report = make_report(Mode::Remark35, t.size(), t.size(), opts);
    const std::vector<Item> items{Item{make_ref(t, 0), t}};
    merge_into(report, run_pool(items, opts, [&](const Item& it) { return scan_remark35(it, opts); }));
    return report;
}

}  // namespace qtree::search
