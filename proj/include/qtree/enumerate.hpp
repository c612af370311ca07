#pragma once

#include "qtree/tree.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace qtree {

inline constexpr int kDefaultMaxEnumerationSize = 16;

/// Streams one representative per isomorphism class of free trees on n
/// vertices, in a fixed order (Wright-Richmond-Odlyzko-McKay successor on
/// canonical level sequences).
class TreeEnumerator {
public:
    /// Throws InputError unless 1 <= n <= max_n.
    explicit TreeEnumerator(int n, int max_n = kDefaultMaxEnumerationSize);

    /// Next tree, or nullopt once the stream is exhausted.
    std::optional<Tree> next();
    /// Index of the tree the next call to next() returns.
    [[nodiscard]] std::uint64_t index() const { return index_; }

private:
    void advance();

    int n_;
    std::vector<int> layout_;
    bool done_ = false;
    bool primed_ = false;
    std::uint64_t index_ = 0;
};

std::vector<Tree> enumerate_trees(int n, int max_n = kDefaultMaxEnumerationSize);
std::uint64_t count_trees(int n, int max_n = kDefaultMaxEnumerationSize);

/// Trees with enumeration index in [begin, end).
std::vector<Tree> enumerate_trees_range(int n, std::uint64_t begin, std::uint64_t end,
                                        int max_n = kDefaultMaxEnumerationSize);

/// Tree encoded by a level sequence (depths in preorder, first entry 0).
Tree tree_from_levels(const std::vector<int>& levels);

}  // namespace qtree
