#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace qtree {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Combinatorial equilateral tree on vertices 0..n-1. The common edge length
/// is a formal unit and is never stored.
class Tree {
public:
    /// Validates: n >= 1, exactly n-1 edges, labels in range, no loops or
    /// duplicates, connected. Throws InputError otherwise.
    Tree(int n, std::vector<Edge> edges);

    /// Single vertex.
    static Tree singleton() { return Tree(1, {}); }
    /// Path on n vertices, 0-1-...-(n-1).
    static Tree path(int n);
    /// Star with one center (label 0) and `leaves` leaves.
    static Tree star(int leaves);
    /// Center 0 with one leg of each given length.
    static Tree spider(std::span<const int> legs);

    [[nodiscard]] int size() const { return n_; }
    [[nodiscard]] const std::vector<Edge>& edges() const { return edges_; }
    [[nodiscard]] const std::vector<Vertex>& neighbors(Vertex v) const;
    [[nodiscard]] int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }
    [[nodiscard]] bool contains(Vertex v) const { return v >= 0 && v < n_; }

    [[nodiscard]] bool is_pendant(Vertex v) const { return degree(v) == 1; }
    [[nodiscard]] bool is_interior(Vertex v) const { return degree(v) >= 2; }
    [[nodiscard]] std::vector<Vertex> pendants() const;
    [[nodiscard]] std::vector<Vertex> interior_vertices() const;

    /// One or two central vertices (minimum eccentricity).
    [[nodiscard]] std::vector<Vertex> centers() const;

    friend bool operator==(const Tree& a, const Tree& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

private:
    int n_;
    std::vector<Edge> edges_;
    std::vector<std::vector<Vertex>> adj_;
};

struct RootedTree {
    RootedTree(Tree t, Vertex r);

    Tree tree;
    Vertex root;
};

int degree(const Tree& t, Vertex v);
std::vector<Vertex> pendants(const Tree& t);
std::vector<Vertex> interior_vertices(const Tree& t);

/// Glue `attached` onto `base` by identifying attached.root with v. Base labels
/// are kept; the non-root vertices of `attached` follow in increasing label
/// order starting at base.size().
Tree attach(const Tree& base, Vertex v, const RootedTree& attached);

/// Label that `attached` vertex `u` receives in attach(base, v, attached).
Vertex attached_label(const Tree& base, Vertex v, const RootedTree& attached, Vertex u);

/// Parent of each vertex when oriented away from `root` (-1 for the root) and a
/// BFS order starting at the root.
struct Orientation {
    std::vector<Vertex> parent;
    std::vector<Vertex> order;
};
Orientation orient(const Tree& t, Vertex root);

}  // namespace qtree
