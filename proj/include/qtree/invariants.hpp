#pragma once

#include "qtree/spectral.hpp"

#include <string>

namespace qtree {

/// Outcome of a structural check on a characteristic polynomial; `detail`
/// explains a failure.
struct CheckResult {
    bool ok = true;
    std::string detail;

    explicit operator bool() const { return ok; }
};

/// Every root of P is real and lies in [-1, 1].
CheckResult check_root_range(const IntPoly& p);
/// P(-z) == (-1)^deg(P) P(z).
CheckResult check_parity(const IntPoly& p);
/// leading(P) equals the product of degrees of the vertices outside the
/// Dirichlet set.
CheckResult check_leading_coefficient(const RootedTree& rt, const ProblemSpec& spec, const CharFn& f);
/// Dirichlet roots interlace Neumann roots (the Dirichlet matrix is a
/// principal submatrix of the Neumann one).
CheckResult check_interlacing(const CharPair& pair);

/// All four checks on the pair of the rooted tree.
CheckResult check_all(const RootedTree& rt, PendantMode mode, const CharPair& pair);

}  // namespace qtree
