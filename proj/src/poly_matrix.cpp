#include "qtree/poly_matrix.hpp"

#include "qtree/errors.hpp"

#include <utility>

namespace qtree {

PolyMatrix::PolyMatrix(const std::vector<std::vector<IntPoly>>& rows) : PolyMatrix(rows.size()) {
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != size_) throw InputError("det_poly_matrix: matrix is not square");
        for (std::size_t c = 0; c < size_; ++c) (*this)(r, c) = rows[r][c];
    }
}

IntPoly det_poly_matrix(PolyMatrix m) {
    const std::size_t n = m.size();
    if (n == 0) return IntPoly{1};
    bool negate = false;
    IntPoly prev{1};
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k).is_zero()) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && m(swap_row, k).is_zero()) ++swap_row;
            if (swap_row == n) return {};
            for (std::size_t c = 0; c < n; ++c) std::swap(m(k, c), m(swap_row, c));
            negate = !negate;
        }
        const IntPoly& pivot = m(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                IntPoly t = pivot * m(i, j) - m(i, k) * m(k, j);
                m(i, j) = exact_div(t, prev);
            }
            m(i, k) = IntPoly{};
        }
        prev = m(k, k);
    }
    IntPoly det = std::move(m(n - 1, n - 1));
    return negate ? -det : det;
}

IntPoly det_poly_matrix(const std::vector<std::vector<IntPoly>>& rows) {
    return det_poly_matrix(PolyMatrix(rows));
}

}  // namespace qtree
