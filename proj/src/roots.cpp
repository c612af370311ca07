#include "qtree/roots.hpp"

#include "qtree/errors.hpp"

#include <algorithm>
#include <cmath>

namespace qtree {
namespace {

int sign_of(const BigInt& v) { return sgn(v); }
int sign_of(const Rational& v) { return sgn(v); }

int variations(const std::vector<int>& signs) {
    int count = 0;
    int last = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (last != 0 && s != last) ++count;
        last = s;
    }
    return count;
}

int variations_at(const std::vector<IntPoly>& chain, const Rational& x) {
    std::vector<int> signs;
    signs.reserve(chain.size());
    for (const auto& p : chain) signs.push_back(sign_of(p.eval(x)));
    return variations(signs);
}

// Sign of p at +infinity (dir = +1) or -infinity (dir = -1).
int variations_at_infinity(const std::vector<IntPoly>& chain, int dir) {
    std::vector<int> signs;
    signs.reserve(chain.size());
    for (const auto& p : chain) {
        int s = sign_of(p.leading());
        if (dir < 0 && p.degree() % 2 == 1) s = -s;
        signs.push_back(s);
    }
    return variations(signs);
}

// Cauchy bound: every real root lies strictly inside (-B, B).
BigInt cauchy_bound(const IntPoly& a) {
    BigInt maxc = 0;
    const BigInt lead = abs(a.leading());
    for (int k = 0; k < a.degree(); ++k) {
        BigInt c = abs(a.coeff(k));
        if (c > maxc) maxc = c;
    }
    BigInt q = maxc / lead;
    return q + 2;
}

void isolate(const std::vector<IntPoly>& chain, const Rational& lo, const Rational& hi, int vlo, int vhi,
             int multiplicity, std::vector<RootInterval>& out) {
    const int n = vlo - vhi;  // roots in (lo, hi]
    if (n == 0) return;
    if (n == 1) {
        out.push_back({lo, hi, multiplicity});
        return;
    }
    Rational mid = (lo + hi) / 2;
    mid.canonicalize();
    const int vmid = variations_at(chain, mid);
    isolate(chain, lo, mid, vlo, vmid, multiplicity, out);
    isolate(chain, mid, hi, vmid, vhi, multiplicity, out);
}

}  // namespace

std::vector<IntPoly> sturm_sequence(const IntPoly& a) {
    if (a.is_zero()) throw InputError("sturm_sequence: zero polynomial");
    std::vector<IntPoly> chain{a};
    IntPoly d = a.derivative();
    if (d.is_zero()) return chain;
    chain.push_back(d);
    while (true) {
        const IntPoly& p = chain[chain.size() - 2];
        const IntPoly& q = chain.back();
        IntPoly r = pseudo_remainder(p, q);
        if (r.is_zero()) break;
        // prem multiplies by lc(q)^k; flip if that factor is negative so the
        // chain keeps the sign pattern of the true remainders.
        const int k = p.degree() - q.degree() + 1;
        bool flip = q.leading() < 0 && k % 2 == 1;
        r = flip ? r : -r;
        BigInt g = r.content();
        std::vector<BigInt> v = r.coeffs();
        for (auto& c : v) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
        chain.emplace_back(std::move(v));
    }
    return chain;
}

int count_real_roots(const IntPoly& a, const Rational& lo, const Rational& hi) {
    if (a.is_zero()) throw InputError("count_real_roots: zero polynomial");
    if (hi < lo) return 0;
    // The chain of a non-square-free polynomial vanishes entirely at its
    // repeated roots, which breaks the variation count there.
    const auto chain = sturm_sequence(square_free_part(a));
    int n = variations_at(chain, lo) - variations_at(chain, hi);
    if (a.eval(lo) == 0) ++n;
    return n;
}

int count_real_roots(const IntPoly& a) {
    if (a.is_zero()) throw InputError("count_real_roots: zero polynomial");
    const auto chain = sturm_sequence(a);
    return variations_at_infinity(chain, -1) - variations_at_infinity(chain, +1);
}

std::vector<RootInterval> isolate_real_roots(const IntPoly& a) {
    if (a.is_zero()) throw InputError("isolate_real_roots: zero polynomial");
    std::vector<RootInterval> out;
    const auto factors = square_free_decomposition(a);
    for (std::size_t i = 0; i < factors.size(); ++i) {
        const IntPoly& f = factors[i];
        if (f.degree() <= 0) continue;
        const auto chain = sturm_sequence(f);
        const BigInt b = cauchy_bound(f);
        const Rational lo(-b), hi(b);
        isolate(chain, lo, hi, variations_at(chain, lo), variations_at(chain, hi), static_cast<int>(i) + 1, out);
    }
    // Intervals from different factors may overlap; shrink until disjoint.
    std::sort(out.begin(), out.end(), [](const RootInterval& x, const RootInterval& y) { return x.lo < y.lo; });
    bool overlapping = true;
    while (overlapping) {
        overlapping = false;
        for (std::size_t i = 0; i + 1 < out.size(); ++i) {
            if (out[i].hi > out[i + 1].lo) {
                overlapping = true;
                for (std::size_t j : {i, i + 1}) {
                    RootInterval& iv = out[j];
                    const IntPoly& f = factors[static_cast<std::size_t>(iv.multiplicity - 1)];
                    Rational mid = (iv.lo + iv.hi) / 2;
                    mid.canonicalize();
                    if (count_real_roots(f, iv.lo, mid) - (f.eval(iv.lo) == 0 ? 1 : 0) == 1) {
                        iv.hi = mid;
                    } else {
                        iv.lo = mid;
                    }
                }
            }
        }
        std::sort(out.begin(), out.end(), [](const RootInterval& x, const RootInterval& y) { return x.lo < y.lo; });
    }
    return out;
}

double refine_root(const IntPoly& a, const RootInterval& iv, double tol) {
    const auto factors = square_free_decomposition(a);
    if (iv.multiplicity < 1 || static_cast<std::size_t>(iv.multiplicity) > factors.size()) {
        throw InputError("refine_root: interval does not belong to this polynomial");
    }
    const IntPoly& f = factors[static_cast<std::size_t>(iv.multiplicity - 1)];
    Rational lo = iv.lo, hi = iv.hi;
    if (f.eval(hi) == 0) return hi.get_d();
    int shi = sgn(f.eval(hi));
    // f has exactly one simple root in (lo, hi], so it changes sign across it.
    while (Rational(hi - lo).get_d() > tol) {
        Rational mid = (lo + hi) / 2;
        mid.canonicalize();
        const int sm = sgn(f.eval(mid));
        if (sm == 0) return mid.get_d();
        if (sm == shi) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Rational mid = (lo + hi) / 2;
    return mid.get_d();
}

std::vector<RealRoot> real_roots(const IntPoly& a, double tol) {
    std::vector<RealRoot> out;
    for (const auto& iv : isolate_real_roots(a)) out.push_back({refine_root(a, iv, tol), iv.multiplicity});
    return out;
}

}  // namespace qtree
