#pragma once

#include "qtree/spectral.hpp"
#include "qtree/tree.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace qtree::io {

using Json = nlohmann::ordered_json;

/// Coefficient array, ascending degree. Values that fit in 64 bits are
/// written as JSON integers, larger ones as decimal strings; both are read.
Json poly_to_json(const IntPoly& p);
IntPoly poly_from_json(const Json& j, const std::string& field = "poly");

/// {"s_exp": e, "poly": [...]}
Json charfn_to_json(const CharFn& f);
CharFn charfn_from_json(const Json& j);

/// {"n": n, "edges": [[i, j], ...], "root": r | null}
Json tree_to_json(const Tree& t, std::optional<Vertex> root = std::nullopt);

struct TreeFile {
    Tree tree;
    std::optional<Vertex> root;
};
/// Throws InputError naming the offending field.
TreeFile tree_from_json(const Json& j);
TreeFile read_tree_file(const std::string& path);

/// Graphviz rendering: pendant vertices as open circles, interior vertices as
/// filled circles, the root (if any) drawn with a double outline.
std::string tree_to_dot(const Tree& t, std::optional<Vertex> root = std::nullopt);

}  // namespace qtree::io
