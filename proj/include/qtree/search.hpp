#pragma once

#include "qtree/spectral.hpp"
#include "qtree/tree.hpp"

#include <json.hpp>

#include <atomic>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qtree::search {

enum class Mode { CospectralPairs, EqualM, TheoremVerify, Remark35 };
std::string to_string(Mode m);

/// Contiguous block `index` of `count` over the enumeration order.
struct Shard {
    int index = 0;
    int count = 1;
};
/// Parses "i/k" with 0 <= i < k.
Shard parse_shard(const std::string& s);

struct SearchOptions {
    PendantMode pendant_mode = PendantMode::Dirichlet;
    int jobs = 1;
    Shard shard;
    int max_n = 16;
    /// Also consider pendant vertices as attachment points.
    bool include_pendant_roots = false;
    /// Polled between trees; a set flag stops the scan and marks the report
    /// incomplete.
    const std::atomic<bool>* cancel = nullptr;
};

/// Tree reference inside a report: size, enumeration index, canonical code
/// and the enumeration's labels (which vertex fields refer to).
struct TreeRef {
    int n = 0;
    std::uint64_t index = 0;
    std::string code;
    std::vector<Edge> edges;
};

struct CospectralGroup {
    int n = 0;
    /// Common (s-exponent, primitive polynomial) key.
    CharFn key;
    std::vector<TreeRef> members;
};

struct PairRecord {
    TreeRef tree;
    Vertex v1 = 0;
    Vertex v2 = 0;
    int d1 = 0;
    int d2 = 0;
    CharPair pair1;
    CharPair pair2;
    /// Glued with P_2 at v1 and v2.
    CharFn attached1;
    CharFn attached2;
    /// leading(P1)/leading(P2), set for unequal-degree witnesses.
    std::optional<Rational> constant;
};

struct Violation {
    TreeRef tree;
    Vertex v1 = 0;
    Vertex v2 = 0;
    std::string kind;
    std::string detail;
};

struct SearchReport {
    Mode mode = Mode::EqualM;
    int n_min = 0;
    int n_max = 0;
    PendantMode pendant_mode = PendantMode::Dirichlet;
    std::vector<CospectralGroup> groups;
    std::vector<PairRecord> pairs;
    std::vector<Violation> violations;
    std::map<std::string, std::uint64_t> stats;
    nlohmann::ordered_json config;
    bool complete = true;
};

/// P_2, P_3, P_4 rooted at an end, the 3-star rooted at a leaf and at its center.
std::vector<RootedTree> default_attach_family();
std::string family_member_name(const RootedTree& rt);

/// Groups the trees on n vertices by (e, primitive P) of the root-free problem
/// and reports every group with at least two members.
SearchReport find_cospectral_pairs(int n, const SearchOptions& opts = {});

/// Non-symmetric vertex pairs of equal degree whose P_2 attachments are
/// cospectral. Every hit is cross-checked against direct equality of the
/// characteristic pairs; disagreement becomes a violation.
SearchReport find_equal_m_vertex_pairs(int n, const SearchOptions& opts = {});
/// Same scan restricted to one tree.
SearchReport find_equal_m_vertex_pairs(const Tree& t, const SearchOptions& opts = {});

/// Checks, for all trees with 2 <= n <= n_max and all interior vertex pairs:
/// [P_2 attachments cospectral and equal degrees] <=> [equal characteristic
/// pairs], the glue constant on every cospectral attachment, and that equal
/// pairs give identical functions for every member of `family`.
SearchReport verify_theorems(int n_max, const std::vector<RootedTree>& family, const SearchOptions& opts = {});

/// Interior pairs with unequal degrees whose P_2 attachments are cospectral
/// but not equal, each with its proportionality constant.
SearchReport find_remark35_witnesses(int n_max, const SearchOptions& opts = {});
SearchReport find_remark35_witnesses(const Tree& t, const SearchOptions& opts = {});

/// Fast equal-M criterion: glue P_2 at v1 and at v2 and compare the spectra
/// of the two resulting trees.
bool p2_attachments_cospectral(const Tree& t, Vertex v1, Vertex v2, PendantMode mode);

}  // namespace qtree::search
