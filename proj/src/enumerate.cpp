#include "qtree/enumerate.hpp"

#include "qtree/errors.hpp"

#include <algorithm>
#include <string>

namespace qtree {
namespace {

using Layout = std::vector<int>;

// Successor of a canonical rooted level sequence; p is the position to
// increment from (last non-1 entry when negative).
std::optional<Layout> next_rooted(const Layout& pred, int p = -1) {
    if (p < 0) {
        p = static_cast<int>(pred.size()) - 1;
        while (p > 0 && pred[static_cast<std::size_t>(p)] == 1) --p;
    }
    if (p <= 0) return std::nullopt;
    int q = p - 1;
    while (pred[static_cast<std::size_t>(q)] != pred[static_cast<std::size_t>(p)] - 1) --q;
    Layout out = pred;
    for (std::size_t i = static_cast<std::size_t>(p); i < out.size(); ++i) {
        out[i] = out[i - static_cast<std::size_t>(p) + static_cast<std::size_t>(q)];
    }
    return out;
}

// Left subtree (the first child of the root, levels shifted up by one) and
// the rest of the tree.
std::pair<Layout, Layout> split(const Layout& layout) {
    std::size_t m = layout.size();
    bool one_found = false;
    for (std::size_t i = 0; i < layout.size(); ++i) {
        if (layout[i] == 1) {
            if (one_found) {
                m = i;
                break;
            }
            one_found = true;
        }
    }
    Layout left, rest{0};
    for (std::size_t i = 1; i < m; ++i) left.push_back(layout[i] - 1);
    for (std::size_t i = m; i < layout.size(); ++i) rest.push_back(layout[i]);
    return {left, rest};
}

// Returns the candidate if it roots a free tree at its center in canonical
// form, otherwise jumps ahead to the next candidate.
std::optional<Layout> next_tree(const Layout& candidate) {
    auto [left, rest] = split(candidate);
    const int left_height = *std::max_element(left.begin(), left.end());
    const int rest_height = *std::max_element(rest.begin(), rest.end());
    bool valid = rest_height >= left_height;
    if (valid && rest_height == left_height) {
        if (left.size() > rest.size()) {
            valid = false;
        } else if (left.size() == rest.size() && left > rest) {
            valid = false;
        }
    }
    if (valid) return candidate;
    const int p = static_cast<int>(left.size());
    auto fresh = next_rooted(candidate, p);
    if (!fresh) return std::nullopt;
    if (candidate[static_cast<std::size_t>(p)] > 2) {
        auto [new_left, new_rest] = split(*fresh);
        const int h = *std::max_element(new_left.begin(), new_left.end());
        const std::size_t len = static_cast<std::size_t>(h) + 1;
        for (std::size_t k = 0; k < len; ++k) (*fresh)[fresh->size() - len + k] = static_cast<int>(k) + 1;
    }
    return fresh;
}

}  // namespace

Tree tree_from_levels(const std::vector<int>& levels) {
    std::vector<Edge> edges;
    std::vector<std::size_t> stack;
    for (std::size_t i = 0; i < levels.size(); ++i) {
        while (!stack.empty() && levels[stack.back()] >= levels[i]) stack.pop_back();
        if (!stack.empty()) edges.emplace_back(static_cast<Vertex>(stack.back()), static_cast<Vertex>(i));
        stack.push_back(i);
    }
    return Tree(static_cast<int>(levels.size()), std::move(edges));
}

TreeEnumerator::TreeEnumerator(int n, int max_n) : n_(n) {
    if (n < 1 || n > max_n) {
        throw InputError("enumerate_trees: n must be in [1, " + std::to_string(max_n) + "], got " + std::to_string(n));
    }
    if (n >= 2) {
        // Path of length n rooted at its center.
        for (int i = 0; i <= n / 2; ++i) layout_.push_back(i);
        for (int i = 1; i < (n + 1) / 2; ++i) layout_.push_back(i);
    }
}

void TreeEnumerator::advance() {
    auto nxt = next_rooted(layout_);
    if (!nxt) {
        done_ = true;
        return;
    }
    auto t = next_tree(*nxt);
    if (!t) {
        done_ = true;
        return;
    }
    layout_ = std::move(*t);
}

std::optional<Tree> TreeEnumerator::next() {
    if (done_) return std::nullopt;
    if (n_ <= 2) {
        done_ = true;
        ++index_;
        return n_ == 1 ? Tree::singleton() : Tree::path(2);
    }
    if (!primed_) {
        primed_ = true;
        auto t = next_tree(layout_);
        if (!t) {
            done_ = true;
            return std::nullopt;
        }
        layout_ = std::move(*t);
    } else {
        advance();
        if (done_) return std::nullopt;
    }
    ++index_;
    return tree_from_levels(layout_);
}

std::vector<Tree> enumerate_trees(int n, int max_n) {
    std::vector<Tree> out;
    TreeEnumerator e(n, max_n);
    while (auto t = e.next()) out.push_back(std::move(*t));
    return out;
}

std::uint64_t count_trees(int n, int max_n) {
    TreeEnumerator e(n, max_n);
    while (e.next()) {
    }
    return e.index();
}

std::vector<Tree> enumerate_trees_range(int n, std::uint64_t begin, std::uint64_t end, int max_n) {
    std::vector<Tree> out;
    TreeEnumerator e(n, max_n);
    while (e.index() < end) {
        const std::uint64_t idx = e.index();
        auto t = e.next();
        if (!t) break;
        if (idx >= begin) out.push_back(std::move(*t));
    }
    return out;
}

}  // namespace qtree
