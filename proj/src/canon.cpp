#include "qtree/canon.hpp"

#include "qtree/errors.hpp"

#include <algorithm>
#include <map>

namespace qtree {

std::string CanonCode::to_string() const {
    std::string s;
    s.reserve(bits.size());
    for (auto b : bits) s.push_back(b ? '1' : '0');
    return s;
}

CanonCode CanonCode::from_string(const std::string& s) {
    CanonCode c;
    c.bits.reserve(s.size());
    for (char ch : s) {
        if (ch != '0' && ch != '1') throw InputError("canon code: expected only '0'/'1' characters");
        c.bits.push_back(ch == '1' ? 1 : 0);
    }
    return c;
}

CanonCode canon_code(const Tree& t, Vertex root) {
    if (!t.contains(root)) throw InputError("canon_code: root out of range");
    const Orientation o = orient(t, root);
    std::vector<std::vector<std::uint8_t>> code(static_cast<std::size_t>(t.size()));
    for (auto it = o.order.rbegin(); it != o.order.rend(); ++it) {
        const Vertex v = *it;
        std::vector<const std::vector<std::uint8_t>*> kids;
        for (Vertex w : t.neighbors(v)) {
            if (w != o.parent[static_cast<std::size_t>(v)]) kids.push_back(&code[static_cast<std::size_t>(w)]);
        }
        std::sort(kids.begin(), kids.end(), [](auto* a, auto* b) { return *a > *b; });
        auto& out = code[static_cast<std::size_t>(v)];
        out.push_back(1);
        for (auto* k : kids) {
            out.insert(out.end(), k->begin(), k->end());
        }
        out.push_back(0);
        for (Vertex w : t.neighbors(v)) {
            if (w != o.parent[static_cast<std::size_t>(v)]) {
                code[static_cast<std::size_t>(w)].clear();
                code[static_cast<std::size_t>(w)].shrink_to_fit();
            }
        }
    }
    return CanonCode{std::move(code[static_cast<std::size_t>(root)])};
}

CanonCode canon_code(const RootedTree& rt) { return canon_code(rt.tree, rt.root); }

CanonCode canon_code(const Tree& t) {
    const auto c = t.centers();
    CanonCode best = canon_code(t, c[0]);
    if (c.size() == 2) best = std::min(best, canon_code(t, c[1]));
    return best;
}

std::vector<int> orbit_ids(const Tree& t) {
    std::map<CanonCode, int> ids;
    std::vector<int> out(static_cast<std::size_t>(t.size()));
    for (Vertex v = 0; v < t.size(); ++v) {
        auto [it, inserted] = ids.try_emplace(canon_code(t, v), static_cast<int>(ids.size()));
        out[static_cast<std::size_t>(v)] = it->second;
    }
    return out;
}

std::vector<std::vector<Vertex>> vertex_orbits(const Tree& t) {
    const auto ids = orbit_ids(t);
    const int blocks = ids.empty() ? 0 : *std::max_element(ids.begin(), ids.end()) + 1;
    std::vector<std::vector<Vertex>> out(static_cast<std::size_t>(blocks));
    for (Vertex v = 0; v < t.size(); ++v) out[static_cast<std::size_t>(ids[static_cast<std::size_t>(v)])].push_back(v);
    return out;
}

RootedTree tree_from_code(const CanonCode& code) {
    if (code.bits.size() < 2 || code.bits.size() % 2 != 0) throw InputError("canon code: malformed length");
    std::vector<Edge> edges;
    std::vector<Vertex> stack;
    int next = 0;
    for (std::size_t i = 0; i < code.bits.size(); ++i) {
        if (code.bits[i]) {
            if (!stack.empty()) edges.emplace_back(stack.back(), next);
            else if (next != 0) throw InputError("canon code: more than one root");
            stack.push_back(next++);
        } else {
            if (stack.empty()) throw InputError("canon code: unbalanced");
            stack.pop_back();
        }
    }
    if (!stack.empty()) throw InputError("canon code: unbalanced");
    return RootedTree(Tree(next, std::move(edges)), 0);
}

}  // namespace qtree
