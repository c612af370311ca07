#pragma once

#include "qtree/poly.hpp"

#include <cstddef>
#include <vector>

namespace qtree {

/// Row-major square matrix over Z[z].
class PolyMatrix {
public:
    PolyMatrix() = default;
    explicit PolyMatrix(std::size_t size) : size_(size), cells_(size * size) {}
    /// Throws InputError unless every row has `rows.size()` entries.
    explicit PolyMatrix(const std::vector<std::vector<IntPoly>>& rows);

    [[nodiscard]] std::size_t size() const { return size_; }
    IntPoly& operator()(std::size_t r, std::size_t c) { return cells_[r * size_ + c]; }
    const IntPoly& operator()(std::size_t r, std::size_t c) const { return cells_[r * size_ + c]; }

private:
    std::size_t size_ = 0;
    std::vector<IntPoly> cells_;
};

/// Exact determinant by fraction-free (Bareiss) elimination over Z[z]. The
/// empty matrix has determinant 1.
IntPoly det_poly_matrix(PolyMatrix m);
IntPoly det_poly_matrix(const std::vector<std::vector<IntPoly>>& rows);

}  // namespace qtree
