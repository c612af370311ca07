#pragma once
// Independent reference implementations used only by the tests. Nothing here
// shares code with the library beyond the IntPoly and Tree value types.

#include "qtree/poly.hpp"
#include "qtree/tree.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace oracle {

// Laplace expansion along the first row. Fine up to about 8x8.
inline qtree::IntPoly cofactor_det(const std::vector<std::vector<qtree::IntPoly>>& m) {
    const std::size_t n = m.size();
    if (n == 0) return qtree::IntPoly::constant(1);
    if (n == 1) return m[0][0];
    qtree::IntPoly total;
    for (std::size_t j = 0; j < n; ++j) {
        if (m[0][j].is_zero()) continue;
        std::vector<std::vector<qtree::IntPoly>> minor;
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<qtree::IntPoly> row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != j) row.push_back(m[i][k]);
            minor.push_back(std::move(row));
        }
        qtree::IntPoly term = m[0][j] * cofactor_det(minor);
        if (j % 2) total -= term;
        else total += term;
    }
    return total;
}

inline std::vector<std::vector<int>> adjacency(const qtree::Tree& t) {
    std::vector<std::vector<int>> a(t.size(), std::vector<int>(t.size(), 0));
    for (auto [u, v] : t.edges()) a[u][v] = a[v][u] = 1;
    return a;
}

// (e, det(zD - A)) with the Dirichlet set given explicitly.
struct RefCharFn {
    int e;
    qtree::IntPoly p;
};

inline RefCharFn char_fn(const qtree::Tree& t, int root, bool dirichlet_root, bool dirichlet_pendants) {
    const int n = t.size();
    const auto a = adjacency(t);
    std::vector<int> keep;
    int removed = 0;
    for (int v = 0; v < n; ++v) {
        int deg = std::accumulate(a[v].begin(), a[v].end(), 0);
        bool dir = false;
        if (v == root) dir = dirichlet_root;
        else if (deg == 1) dir = dirichlet_pendants;
        if (dir) ++removed;
        else keep.push_back(v);
    }
    std::vector<std::vector<qtree::IntPoly>> m(keep.size(), std::vector<qtree::IntPoly>(keep.size()));
    for (std::size_t i = 0; i < keep.size(); ++i) {
        for (std::size_t j = 0; j < keep.size(); ++j) {
            if (i == j) {
                int deg = std::accumulate(a[keep[i]].begin(), a[keep[i]].end(), 0);
                m[i][j] = qtree::IntPoly::monomial(deg, 1);
            } else if (a[keep[i]][keep[j]]) {
                m[i][j] = qtree::IntPoly::constant(-1);
            }
        }
    }
    return {removed - 1, cofactor_det(m)};
}

// Prufer decoding.
inline qtree::Tree from_prufer(int n, const std::vector<int>& seq) {
    if (n == 1) return qtree::Tree::singleton();
    if (n == 2) return qtree::Tree(2, {{0, 1}});
    std::vector<int> deg(n, 1);
    for (int x : seq) ++deg[x];
    std::vector<qtree::Edge> edges;
    for (int x : seq) {
        for (int leaf = 0; leaf < n; ++leaf) {
            if (deg[leaf] == 1) {
                edges.push_back({leaf, x});
                --deg[leaf];
                --deg[x];
                break;
            }
        }
    }
    int u = -1;
    for (int v = 0; v < n; ++v) {
        if (deg[v] == 1) {
            if (u < 0) u = v;
            else edges.push_back({u, v});
        }
    }
    return qtree::Tree(n, edges);
}

inline qtree::Tree random_tree(int n, std::mt19937_64& rng) {
    if (n <= 2) return qtree::Tree::path(n);
    std::uniform_int_distribution<int> d(0, n - 1);
    std::vector<int> seq(n - 2);
    for (auto& x : seq) x = d(rng);
    return from_prufer(n, seq);
}

// Parenthesis string for the rooted subtree, children sorted as strings.
inline std::string ahu_string(const std::vector<std::vector<int>>& adj, int v, int parent) {
    std::vector<std::string> kids;
    for (int w = 0; w < (int)adj.size(); ++w)
        if (adj[v][w] && w != parent) kids.push_back(ahu_string(adj, w, v));
    std::sort(kids.begin(), kids.end());
    std::string s = "(";
    for (auto& k : kids) s += k;
    return s + ")";
}

// Minimum over all roots: a valid free-tree invariant without centers.
inline std::string free_key(const qtree::Tree& t) {
    const auto adj = adjacency(t);
    std::string best;
    for (int r = 0; r < t.size(); ++r) {
        auto s = ahu_string(adj, r, -1);
        if (r == 0 || s < best) best = s;
    }
    return best;
}

namespace detail {

inline std::string ahu_lists(const std::vector<std::vector<int>>& adj, int v, int parent) {
    std::vector<std::string> kids;
    for (int w : adj[v])
        if (w != parent) kids.push_back(ahu_lists(adj, w, v));
    std::sort(kids.begin(), kids.end());
    std::string s = "(";
    for (auto& k : kids) s += k;
    return s + ")";
}

// Key rooted at the center(s) found by peeling leaves.
inline std::string center_key(const std::vector<std::vector<int>>& adj) {
    const int n = static_cast<int>(adj.size());
    if (n == 1) return "()";
    std::vector<int> deg(n), layer;
    for (int v = 0; v < n; ++v) {
        deg[v] = static_cast<int>(adj[v].size());
        if (deg[v] == 1) layer.push_back(v);
    }
    int left = n;
    while (left > 2) {
        left -= static_cast<int>(layer.size());
        std::vector<int> next;
        for (int v : layer)
            for (int w : adj[v])
                if (--deg[w] == 1) next.push_back(w);
        layer = std::move(next);
    }
    std::string best = ahu_lists(adj, layer[0], -1);
    if (layer.size() == 2) best = std::min(best, ahu_lists(adj, layer[1], -1));
    return best;
}

}  // namespace detail

// Number of unlabeled trees on n vertices by deduplicating all n^(n-2)
// labeled trees.
inline std::size_t brute_force_tree_count(int n) {
    if (n <= 2) return 1;
    std::set<std::string> seen;
    std::vector<int> seq(n - 2, 0), deg(n);
    std::vector<std::vector<int>> adj(n);
    while (true) {
        for (auto& a : adj) a.clear();
        std::fill(deg.begin(), deg.end(), 1);
        for (int x : seq) ++deg[x];
        for (int x : seq) {
            int leaf = 0;
            while (deg[leaf] != 1) ++leaf;
            adj[leaf].push_back(x);
            adj[x].push_back(leaf);
            --deg[leaf];
            --deg[x];
        }
        int u = 0;
        while (deg[u] != 1) ++u;
        int v = u + 1;
        while (deg[v] != 1) ++v;
        adj[u].push_back(v);
        adj[v].push_back(u);
        seen.insert(detail::center_key(adj));
        int i = n - 3;
        while (i >= 0 && seq[i] == n - 1) seq[i--] = 0;
        if (i < 0) break;
        ++seq[i];
    }
    return seen.size();
}

// Isomorphism by trying every relabeling.
inline bool isomorphic_by_permutation(const qtree::Tree& a, const qtree::Tree& b) {
    if (a.size() != b.size()) return false;
    const auto aa = adjacency(a);
    const auto bb = adjacency(b);
    std::vector<int> p(a.size());
    std::iota(p.begin(), p.end(), 0);
    do {
        bool ok = true;
        for (auto [u, v] : a.edges())
            if (!bb[p[u]][p[v]]) {
                ok = false;
                break;
            }
        if (ok) return true;
    } while (std::next_permutation(p.begin(), p.end()));
    return false;
}

// orbit[v] = smallest vertex reachable from v by an automorphism.
inline std::vector<int> orbits_by_permutation(const qtree::Tree& t) {
    const auto adj = adjacency(t);
    std::vector<int> orbit(t.size());
    std::iota(orbit.begin(), orbit.end(), 0);
    std::vector<int> p(t.size());
    std::iota(p.begin(), p.end(), 0);
    do {
        bool ok = true;
        for (auto [u, v] : t.edges())
            if (!adj[p[u]][p[v]]) {
                ok = false;
                break;
            }
        if (!ok) continue;
        for (int v = 0; v < t.size(); ++v) orbit[v] = std::min(orbit[v], p[v]);
    } while (std::next_permutation(p.begin(), p.end()));
    return orbit;
}

inline qtree::IntPoly random_poly(std::mt19937_64& rng, int max_deg, long bound) {
    std::uniform_int_distribution<int> dd(-1, max_deg);
    std::uniform_int_distribution<long> cd(-bound, bound);
    const int d = dd(rng);
    std::vector<qtree::BigInt> c;
    for (int i = 0; i <= d; ++i) c.emplace_back(cd(rng));
    return qtree::IntPoly(c);
}

}  // namespace oracle
