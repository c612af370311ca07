#include "qtree/spectral.hpp"

#include "qtree/errors.hpp"
#include "qtree/poly_matrix.hpp"

#include <algorithm>

namespace qtree {

std::string to_string(RootCondition c) { return c == RootCondition::Neumann ? "neumann" : "dirichlet"; }
std::string to_string(PendantMode m) { return m == PendantMode::Dirichlet ? "dirichlet" : "neumann"; }

RootCondition parse_root_condition(const std::string& s) {
    if (s == "neumann") return RootCondition::Neumann;
    if (s == "dirichlet") return RootCondition::Dirichlet;
    throw InputError("root condition must be 'neumann' or 'dirichlet', got '" + s + "'");
}

PendantMode parse_pendant_mode(const std::string& s) {
    if (s == "dirichlet") return PendantMode::Dirichlet;
    if (s == "neumann") return PendantMode::Neumann;
    throw InputError("pendant mode must be 'dirichlet' or 'neumann', got '" + s + "'");
}

namespace {

IntPoly det_over(const Tree& t, const std::vector<bool>& deleted) {
    std::vector<Vertex> keep;
    std::vector<int> pos(static_cast<std::size_t>(t.size()), -1);
    for (Vertex v = 0; v < t.size(); ++v) {
        if (!deleted[static_cast<std::size_t>(v)]) {
            pos[static_cast<std::size_t>(v)] = static_cast<int>(keep.size());
            keep.push_back(v);
        }
    }
    PolyMatrix m(keep.size());
    for (std::size_t i = 0; i < keep.size(); ++i) {
        const Vertex v = keep[i];
        m(i, i) = IntPoly::monomial(t.degree(v), 1);
        for (Vertex w : t.neighbors(v)) {
            const int j = pos[static_cast<std::size_t>(w)];
            if (j >= 0) m(i, static_cast<std::size_t>(j)) = IntPoly{-1};
        }
    }
    return det_poly_matrix(std::move(m));
}

}  // namespace

std::vector<Vertex> dirichlet_set(const RootedTree& rt, const ProblemSpec& spec) {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < rt.tree.size(); ++v) {
        const bool at_root = v == rt.root;
        if (at_root && spec.root == RootCondition::Dirichlet) out.push_back(v);
        if (!at_root && spec.pendants == PendantMode::Dirichlet && rt.tree.is_pendant(v)) out.push_back(v);
    }
    return out;
}

CharFn char_fn(const RootedTree& rt, const ProblemSpec& spec) {
    if (rt.tree.size() < 2) {
        throw InputError("char_fn: a single vertex carries no edge; the problem is degenerate");
    }
    std::vector<bool> deleted(static_cast<std::size_t>(rt.tree.size()), false);
    const auto dset = dirichlet_set(rt, spec);
    for (Vertex v : dset) deleted[static_cast<std::size_t>(v)] = true;
    return CharFn{static_cast<int>(dset.size()) - 1, det_over(rt.tree, deleted)};
}

CharPair char_pair(const RootedTree& rt, PendantMode mode) {
    return CharPair{char_fn(rt, {RootCondition::Neumann, mode}), char_fn(rt, {RootCondition::Dirichlet, mode})};
}

CharFn tree_char_fn(const Tree& t, PendantMode mode) {
    if (t.size() < 2) throw InputError("tree_char_fn: a single vertex carries no edge");
    std::vector<bool> deleted(static_cast<std::size_t>(t.size()), false);
    int count = 0;
    if (mode == PendantMode::Dirichlet) {
        for (Vertex v : t.pendants()) {
            deleted[static_cast<std::size_t>(v)] = true;
            ++count;
        }
    }
    return CharFn{count - 1, det_over(t, deleted)};
}

CharFn mul(const CharFn& f, const CharFn& g) { return CharFn{f.s_exp + g.s_exp, f.poly * g.poly}; }

CharFn add(const CharFn& f, const CharFn& g) {
    if (f.s_exp != g.s_exp) {
        throw ExponentMismatch("add: s-exponents differ (" + std::to_string(f.s_exp) + " vs " +
                               std::to_string(g.s_exp) + ")");
    }
    return CharFn{f.s_exp, f.poly + g.poly};
}

CharFn sub(const CharFn& f, const CharFn& g) {
    if (f.s_exp != g.s_exp) {
        throw ExponentMismatch("sub: s-exponents differ (" + std::to_string(f.s_exp) + " vs " +
                               std::to_string(g.s_exp) + ")");
    }
    return CharFn{f.s_exp, f.poly - g.poly};
}

CharPair combine_at_root(const CharPair& first, const CharPair& second) {
    for (const CharPair* p : {&first, &second}) {
        if (p->neumann.poly.is_zero() || p->dirichlet.poly.is_zero()) {
            throw InputError("combine_at_root: degenerate pair (single-vertex trees cannot be glued)");
        }
    }
    return CharPair{add(mul(first.neumann, second.dirichlet), mul(first.dirichlet, second.neumann)),
                    mul(first.dirichlet, second.dirichlet)};
}

CharFn attach_char_fn(const CharPair& base_pair, const CharPair& attached_pair) {
    return combine_at_root(attached_pair, base_pair).neumann;
}

bool cospectral(const CharFn& f, const CharFn& g) {
    if (f.s_exp != g.s_exp) return false;
    if (f.poly.is_zero() || g.poly.is_zero()) return f.poly.is_zero() && g.poly.is_zero();
    if (f.poly.degree() != g.poly.degree()) return false;
    return primitive_normalize(f.poly) == primitive_normalize(g.poly);
}

CharFn recover_dirichlet_charfn(const CharFn& merged, const CharFn& base_neumann, const CharPair& attached_pair) {
    const CharFn numerator = sub(merged, mul(attached_pair.dirichlet, base_neumann));
    const CharFn& divisor = attached_pair.neumann;
    return CharFn{numerator.s_exp - divisor.s_exp, exact_div(numerator.poly, divisor.poly)};
}

Lemma32Result lemma32_check(const CharFn& f1, const CharFn& f2, int d0, int d1, int d2) {
    if (!cospectral(f1, f2)) throw PreconditionError("lemma32_check: inputs are not cospectral");
    if (d0 < 1 || d1 < 1 || d2 < 1) throw InputError("lemma32_check: degrees must be positive");
    Lemma32Result r;
    r.constant = Rational(f1.poly.leading(), f2.poly.leading());
    r.constant.canonicalize();
    r.predicted = Rational(BigInt((d1 + d0) * d2), BigInt(d1 * (d2 + d0)));
    r.predicted.canonicalize();
    const bool proportional =
        scale(f1.poly, f2.poly.leading()) == scale(f2.poly, f1.poly.leading());
    r.holds = proportional && r.constant == r.predicted;
    r.identical = f1 == f2;
    return r;
}

bool m_equivalent(const Tree& t0, Vertex v1, Vertex v2, PendantMode mode) {
    if (!t0.contains(v1) || !t0.contains(v2)) throw InputError("m_equivalent: vertex out of range");
    if (v1 == v2) throw InputError("m_equivalent: vertices must be distinct");
    if (t0.degree(v1) != t0.degree(v2)) return false;
    return char_pair(RootedTree(t0, v1), mode) == char_pair(RootedTree(t0, v2), mode);
}

}  // namespace qtree
