#pragma once

#include "qtree/tree.hpp"

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace qtree {

/// AHU parenthesis encoding: 1 opens a vertex, 0 closes it, children in
/// sorted order. Equal codes iff isomorphic (root-preserving for rooted input).
struct CanonCode {
    std::vector<std::uint8_t> bits;

    [[nodiscard]] std::string to_string() const;
    static CanonCode from_string(const std::string& s);

    friend auto operator<=>(const CanonCode&, const CanonCode&) = default;
    friend bool operator==(const CanonCode&, const CanonCode&) = default;
};

CanonCode canon_code(const Tree& t, Vertex root);
CanonCode canon_code(const RootedTree& rt);
/// Free-tree code taken from the center (the smaller of the two rooted codes
/// for a bicentral tree).
CanonCode canon_code(const Tree& t);

/// Automorphism orbits; blocks listed by smallest member, members ascending.
std::vector<std::vector<Vertex>> vertex_orbits(const Tree& t);
/// orbit index for each vertex, consistent with vertex_orbits.
std::vector<int> orbit_ids(const Tree& t);

/// Rebuild a rooted tree (root = vertex 0, preorder labels) from its code.
RootedTree tree_from_code(const CanonCode& code);

}  // namespace qtree
