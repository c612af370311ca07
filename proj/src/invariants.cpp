#include "qtree/invariants.hpp"

#include "qtree/roots.hpp"

#include <algorithm>
#include <cmath>

namespace qtree {
namespace {

CheckResult fail(std::string why) { return CheckResult{false, std::move(why)}; }

std::vector<double> expanded_roots(const IntPoly& p) {
    std::vector<double> out;
    for (const auto& r : real_roots(p)) out.insert(out.end(), static_cast<std::size_t>(r.multiplicity), r.value);
    return out;
}

}  // namespace

CheckResult check_root_range(const IntPoly& p) {
    if (p.is_zero()) return fail("zero polynomial");
    if (p.degree() == 0) return {};
    const int total = count_real_roots(p);
    const int distinct = square_free_part(p).degree();
    if (total != distinct) return fail("non-real roots: " + std::to_string(distinct - total) + " missing");
    const int inside = count_real_roots(p, Rational(-1), Rational(1));
    if (inside != total) return fail("roots outside [-1, 1]: " + std::to_string(total - inside));
    return {};
}

CheckResult check_parity(const IntPoly& p) {
    const IntPoly r = p.reflect();
    const bool odd = p.degree() % 2 != 0;
    if ((odd ? -p : p) == r) return {};
    return fail("P(-z) != (-1)^deg P(z) for " + p.to_string());
}

CheckResult check_leading_coefficient(const RootedTree& rt, const ProblemSpec& spec, const CharFn& f) {
    std::vector<bool> deleted(static_cast<std::size_t>(rt.tree.size()), false);
    for (Vertex v : dirichlet_set(rt, spec)) deleted[static_cast<std::size_t>(v)] = true;
    BigInt prod = 1;
    int kept = 0;
    for (Vertex v = 0; v < rt.tree.size(); ++v) {
        if (!deleted[static_cast<std::size_t>(v)]) {
            prod *= rt.tree.degree(v);
            ++kept;
        }
    }
    if (f.poly.degree() != kept) return fail("degree " + std::to_string(f.poly.degree()) + " != kept vertices");
    if (f.poly.leading() != prod) {
        return fail("leading " + f.poly.leading().get_str() + " != degree product " + prod.get_str());
    }
    return {};
}

CheckResult check_interlacing(const CharPair& pair) {
    const auto big = expanded_roots(pair.neumann.poly);
    const auto small = expanded_roots(pair.dirichlet.poly);
    if (small.size() + 1 != big.size()) return fail("Dirichlet polynomial is not one degree lower");
    constexpr double tol = 1e-9;
    for (std::size_t i = 0; i < small.size(); ++i) {
        if (small[i] < big[i] - tol || small[i] > big[i + 1] + tol) {
            return fail("interlacing broken at index " + std::to_string(i));
        }
    }
    return {};
}

CheckResult check_all(const RootedTree& rt, PendantMode mode, const CharPair& pair) {
    for (const CharFn* f : {&pair.neumann, &pair.dirichlet}) {
        if (auto r = check_root_range(f->poly); !r) return r;
        if (auto r = check_parity(f->poly); !r) return r;
    }
    if (auto r = check_leading_coefficient(rt, {RootCondition::Neumann, mode}, pair.neumann); !r) return r;
    if (auto r = check_leading_coefficient(rt, {RootCondition::Dirichlet, mode}, pair.dirichlet); !r) return r;
    return check_interlacing(pair);
}

}  // namespace qtree
