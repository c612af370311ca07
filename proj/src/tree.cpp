#include "qtree/tree.hpp"

#include "qtree/errors.hpp"

#include <algorithm>
#include <queue>
#include <string>

namespace qtree {

Tree::Tree(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    if (n < 1) throw InputError("tree: vertex count must be positive, got " + std::to_string(n));
    if (edges_.size() != static_cast<std::size_t>(n - 1)) {
        throw InputError("tree: expected " + std::to_string(n - 1) + " edges, got " + std::to_string(edges_.size()));
    }
    adj_.resize(static_cast<std::size_t>(n));
    for (auto& [a, b] : edges_) {
        if (a < 0 || a >= n || b < 0 || b >= n) {
            throw InputError("tree: edge (" + std::to_string(a) + "," + std::to_string(b) + ") out of range");
        }
        if (a == b) throw InputError("tree: self-loop at vertex " + std::to_string(a));
        if (a > b) std::swap(a, b);
        adj_[static_cast<std::size_t>(a)].push_back(b);
        adj_[static_cast<std::size_t>(b)].push_back(a);
    }
    for (auto& nb : adj_) {
        std::sort(nb.begin(), nb.end());
        if (std::adjacent_find(nb.begin(), nb.end()) != nb.end()) throw InputError("tree: duplicate edge");
    }
    // n-1 edges and connected implies acyclic.
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    std::vector<Vertex> stack{0};
    seen[0] = true;
    int reached = 1;
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        for (Vertex w : adj_[static_cast<std::size_t>(v)]) {
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = true;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    if (reached != n) throw InputError("tree: graph is not connected");
}

Tree Tree::path(int n) {
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Tree(n, std::move(e));
}

Tree Tree::star(int leaves) {
    std::vector<Edge> e;
    for (int i = 1; i <= leaves; ++i) e.emplace_back(0, i);
    return Tree(leaves + 1, std::move(e));
}

Tree Tree::spider(std::span<const int> legs) {
    std::vector<Edge> e;
    int next = 1;
    for (int len : legs) {
        if (len < 1) throw InputError("spider: leg lengths must be positive");
        Vertex prev = 0;
        for (int k = 0; k < len; ++k) {
            e.emplace_back(prev, next);
            prev = next++;
        }
    }
    return Tree(next, std::move(e));
}

const std::vector<Vertex>& Tree::neighbors(Vertex v) const {
    if (!contains(v)) throw InputError("tree: vertex " + std::to_string(v) + " out of range");
    return adj_[static_cast<std::size_t>(v)];
}

std::vector<Vertex> Tree::pendants() const {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < n_; ++v) {
        if (is_pendant(v)) out.push_back(v);
    }
    return out;
}

std::vector<Vertex> Tree::interior_vertices() const {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < n_; ++v) {
        if (is_interior(v)) out.push_back(v);
    }
    return out;
}

std::vector<Vertex> Tree::centers() const {
    if (n_ <= 2) {
        std::vector<Vertex> all;
        for (Vertex v = 0; v < n_; ++v) all.push_back(v);
        return all;
    }
    // Peel leaves layer by layer.
    std::vector<int> deg(static_cast<std::size_t>(n_));
    std::vector<Vertex> layer;
    for (Vertex v = 0; v < n_; ++v) {
        deg[static_cast<std::size_t>(v)] = degree(v);
        if (deg[static_cast<std::size_t>(v)] == 1) layer.push_back(v);
    }
    int remaining = n_;
    while (remaining > 2) {
        remaining -= static_cast<int>(layer.size());
        std::vector<Vertex> next;
        for (Vertex v : layer) {
            for (Vertex w : adj_[static_cast<std::size_t>(v)]) {
                if (--deg[static_cast<std::size_t>(w)] == 1) next.push_back(w);
            }
        }
        layer = std::move(next);
    }
    std::sort(layer.begin(), layer.end());
    return layer;
}

RootedTree::RootedTree(Tree t, Vertex r) : tree(std::move(t)), root(r) {
    if (!tree.contains(root)) throw InputError("rooted tree: root " + std::to_string(root) + " out of range");
}

int degree(const Tree& t, Vertex v) { return t.degree(v); }
std::vector<Vertex> pendants(const Tree& t) { return t.pendants(); }
std::vector<Vertex> interior_vertices(const Tree& t) { return t.interior_vertices(); }

Vertex attached_label(const Tree& base, Vertex v, const RootedTree& attached, Vertex u) {
    if (u == attached.root) return v;
    return base.size() + (u < attached.root ? u : u - 1);
}

Tree attach(const Tree& base, Vertex v, const RootedTree& attached) {
    if (!base.contains(v)) throw InputError("attach: vertex " + std::to_string(v) + " not in base tree");
    std::vector<Edge> edges = base.edges();
    for (const auto& [a, b] : attached.tree.edges()) {
        edges.emplace_back(attached_label(base, v, attached, a), attached_label(base, v, attached, b));
    }
    return Tree(base.size() + attached.tree.size() - 1, std::move(edges));
}

Orientation orient(const Tree& t, Vertex root) {
    Orientation o;
    o.parent.assign(static_cast<std::size_t>(t.size()), -1);
    std::vector<bool> seen(static_cast<std::size_t>(t.size()), false);
    std::queue<Vertex> q;
    q.push(root);
    seen[static_cast<std::size_t>(root)] = true;
    while (!q.empty()) {
        Vertex v = q.front();
        q.pop();
        o.order.push_back(v);
        for (Vertex w : t.neighbors(v)) {
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = true;
                o.parent[static_cast<std::size_t>(w)] = v;
                q.push(w);
            }
        }
    }
    return o;
}

}  // namespace qtree
