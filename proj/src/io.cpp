#include "qtree/io.hpp"

#include "qtree/errors.hpp"

#include <fstream>
#include <limits>
#include <sstream>

namespace qtree::io {

Json poly_to_json(const IntPoly& p) {
    Json arr = Json::array();
    for (const auto& c : p.coeffs()) {
        if (c.fits_slong_p()) {
            arr.push_back(static_cast<std::int64_t>(c.get_si()));
        } else {
            arr.push_back(c.get_str());
        }
    }
    return arr;
}

IntPoly poly_from_json(const Json& j, const std::string& field) {
    if (!j.is_array()) throw InputError("field '" + field + "': expected an array of coefficients");
    std::vector<BigInt> coeffs;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const Json& c = j[i];
        const std::string where = "field '" + field + "[" + std::to_string(i) + "]'";
        if (c.is_number_integer()) {
            coeffs.emplace_back(std::to_string(c.get<std::int64_t>()));
        } else if (c.is_string()) {
            BigInt v;
            if (v.set_str(c.get<std::string>(), 10) != 0) throw InputError(where + ": not a decimal integer");
            coeffs.push_back(v);
        } else {
            throw InputError(where + ": expected an integer or decimal string");
        }
    }
    return IntPoly(std::move(coeffs));
}

Json charfn_to_json(const CharFn& f) {
    Json j;
    j["s_exp"] = f.s_exp;
    j["poly"] = poly_to_json(f.poly);
    return j;
}

CharFn charfn_from_json(const Json& j) {
    if (!j.is_object()) throw InputError("charfn: expected an object");
    if (!j.contains("s_exp") || !j["s_exp"].is_number_integer()) {
        throw InputError("field 's_exp': missing or not an integer");
    }
    if (!j.contains("poly")) throw InputError("field 'poly': missing");
    return CharFn{j["s_exp"].get<int>(), poly_from_json(j["poly"])};
}

Json tree_to_json(const Tree& t, std::optional<Vertex> root) {
    Json j;
    j["n"] = t.size();
    Json edges = Json::array();
    for (const auto& [a, b] : t.edges()) edges.push_back(Json::array({a, b}));
    j["edges"] = edges;
    j["root"] = root ? Json(*root) : Json(nullptr);
    return j;
}

TreeFile tree_from_json(const Json& j) {
    if (!j.is_object()) throw InputError("tree: expected a JSON object");
    if (!j.contains("n") || !j["n"].is_number_integer()) throw InputError("field 'n': missing or not an integer");
    if (!j.contains("edges") || !j["edges"].is_array()) throw InputError("field 'edges': missing or not an array");
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < j["edges"].size(); ++i) {
        const Json& e = j["edges"][i];
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer()) {
            throw InputError("field 'edges[" + std::to_string(i) + "]': expected [i, j]");
        }
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    std::optional<Vertex> root;
    if (j.contains("root") && !j["root"].is_null()) {
        if (!j["root"].is_number_integer()) throw InputError("field 'root': expected an integer or null");
        root = j["root"].get<int>();
    }
    Tree t(j["n"].get<int>(), std::move(edges));
    if (root && !t.contains(*root)) throw InputError("field 'root': vertex out of range");
    return TreeFile{std::move(t), root};
}

TreeFile read_tree_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open tree file '" + path + "'");
    Json j;
    try {
        j = Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError("tree file '" + path + "': " + e.what());
    }
    return tree_from_json(j);
}

std::string tree_to_dot(const Tree& t, std::optional<Vertex> root) {
    std::ostringstream os;
    os << "graph tree {\n";
    os << "  node [shape=circle, label=\"\", width=0.25, fixedsize=true];\n";
    for (Vertex v = 0; v < t.size(); ++v) {
        os << "  " << v << " [xlabel=\"" << v << "\"";
        if (t.is_pendant(v)) {
            os << ", style=solid";
        } else {
            os << ", style=filled, fillcolor=black";
        }
        if (root && *root == v) os << ", peripheries=2";
        os << "];\n";
    }
    for (const auto& [a, b] : t.edges()) os << "  " << a << " -- " << b << ";\n";
    os << "}\n";
    return os.str();
}

}  // namespace qtree::io
