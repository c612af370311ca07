#pragma once

#include "qtree/poly.hpp"

#include <vector>

namespace qtree {

/// Half-open isolating interval (lo, hi] holding exactly one distinct real
/// root, together with that root's multiplicity in the input polynomial.
struct RootInterval {
    Rational lo;
    Rational hi;
    int multiplicity = 1;
};

/// Sturm chain of a nonzero polynomial: a, a', then negated pseudo-remainders
/// scaled by positive constants.
std::vector<IntPoly> sturm_sequence(const IntPoly& a);

/// Number of distinct real roots in the closed interval [lo, hi].
int count_real_roots(const IntPoly& a, const Rational& lo, const Rational& hi);
/// Number of distinct real roots on the whole line.
int count_real_roots(const IntPoly& a);

/// Disjoint isolating intervals in increasing order, one per distinct real root.
std::vector<RootInterval> isolate_real_roots(const IntPoly& a);

/// Bisects an isolating interval of a square-free factor of `a` until its width
/// is at most `tol`; returns the midpoint.
double refine_root(const IntPoly& a, const RootInterval& iv, double tol = 1e-12);

/// Sorted real roots with multiplicity, each refined to `tol`.
struct RealRoot {
    double value;
    int multiplicity;
};
std::vector<RealRoot> real_roots(const IntPoly& a, double tol = 1e-12);

}  // namespace qtree
