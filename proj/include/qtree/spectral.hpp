#pragma once

#include "qtree/poly.hpp"
#include "qtree/tree.hpp"

#include <string>
#include <vector>

namespace qtree {

enum class RootCondition { Neumann, Dirichlet };
enum class PendantMode { Dirichlet, Neumann };

struct ProblemSpec {
    RootCondition root = RootCondition::Neumann;
    PendantMode pendants = PendantMode::Dirichlet;
};

std::string to_string(RootCondition c);
std::string to_string(PendantMode m);
RootCondition parse_root_condition(const std::string& s);
PendantMode parse_pendant_mode(const std::string& s);

/// phi(lambda) = s(lambda,l)^s_exp * P(c(lambda,l)), up to a nonzero constant.
///
/// P is det(z*D - A) over the vertices that do not carry a Dirichlet
/// condition, D and A being the degree and adjacency matrices of the whole
/// tree. This is the transpose-sign of det(-z*D + A), so leading coefficients
/// come out positive. s_exp = |Dirichlet set| - 1.
struct CharFn {
    int s_exp = 0;
    IntPoly poly;

    friend bool operator==(const CharFn&, const CharFn&) = default;
};

/// Neumann and Dirichlet members for one rooted tree under one pendant mode.
struct CharPair {
    CharFn neumann;
    CharFn dirichlet;

    friend bool operator==(const CharPair&, const CharPair&) = default;
};

/// Vertices carrying a Dirichlet condition for `spec` when rooted at `root`.
std::vector<Vertex> dirichlet_set(const RootedTree& rt, const ProblemSpec& spec);

CharFn char_fn(const RootedTree& rt, const ProblemSpec& spec);
CharPair char_pair(const RootedTree& rt, PendantMode mode);

/// Root-free problem on the whole tree: every pendant Dirichlet (e = r - 1)
/// or nothing Dirichlet (e = -1, P = det(zD - A)).
CharFn tree_char_fn(const Tree& t, PendantMode mode);

CharFn mul(const CharFn& f, const CharFn& g);
/// Throws ExponentMismatch unless f.s_exp == g.s_exp.
CharFn add(const CharFn& f, const CharFn& g);
CharFn sub(const CharFn& f, const CharFn& g);

/// Gluing two rooted trees at their roots:
/// N = N1*D2 + D1*N2, D = D1*D2.
CharPair combine_at_root(const CharPair& first, const CharPair& second);

/// Neumann characteristic function of the tree obtained by gluing the
/// attached root onto the base root.
CharFn attach_char_fn(const CharPair& base_pair, const CharPair& attached_pair);

/// Same s-exponent and proportional polynomials.
bool cospectral(const CharFn& f, const CharFn& g);

/// Dirichlet member of the base pair recovered from the glued tree:
/// (merged - D~ * N_base) / N~. Throws DivisionInexact when this does not close.
CharFn recover_dirichlet_charfn(const CharFn& merged, const CharFn& base_neumann, const CharPair& attached_pair);

struct Lemma32Result {
    bool holds = false;
    /// leading(P1) / leading(P2)
    Rational constant;
    /// ((d1 + d0) * d2) / (d1 * (d2 + d0))
    Rational predicted;
    /// phi_1 == phi_2 exactly, equivalently constant == 1.
    bool identical = false;
};

/// Compares two cospectral glued-tree functions built from the same base and
/// attached trees at v1 and v2. d0 is the attached root degree, d1 and d2 the
/// base degrees. Throws PreconditionError when f1, f2 are not cospectral.
Lemma32Result lemma32_check(const CharFn& f1, const CharFn& f2, int d0, int d1, int d2);

/// Equal characteristic pairs at v1 and v2 and equal degrees.
bool m_equivalent(const Tree& t0, Vertex v1, Vertex v2, PendantMode mode);

}  // namespace qtree
