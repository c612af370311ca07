#include "qtree/poly.hpp"

#include "qtree/errors.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace qtree {

IntPoly::IntPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (long c : coeffs) coeffs_.emplace_back(c);
    trim();
}

IntPoly IntPoly::constant(const BigInt& c) { return IntPoly(std::vector<BigInt>{c}); }

IntPoly IntPoly::monomial(const BigInt& c, int k) {
    if (k < 0) throw InputError("monomial: negative exponent");
    std::vector<BigInt> v(static_cast<std::size_t>(k) + 1);
    v.back() = c;
    return IntPoly(std::move(v));
}

void IntPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt IntPoly::coeff(int k) const {
    if (k < 0 || k > degree()) return 0;
    return coeffs_[static_cast<std::size_t>(k)];
}

const BigInt& IntPoly::leading() const {
    if (is_zero()) throw InputError("leading coefficient of the zero polynomial");
    return coeffs_.back();
}

BigInt IntPoly::eval(const BigInt& x) const {
    BigInt acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Rational IntPoly::eval(const Rational& x) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * x + Rational(*it);
    }
    acc.canonicalize();
    return acc;
}

double IntPoly::eval(double x) const {
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + it->get_d();
    return acc;
}

IntPoly IntPoly::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<BigInt> d(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * static_cast<unsigned long>(k);
    return IntPoly(std::move(d));
}

IntPoly IntPoly::reflect() const {
    IntPoly r = *this;
    for (std::size_t k = 1; k < r.coeffs_.size(); k += 2) r.coeffs_[k] = -r.coeffs_[k];
    return r;
}

BigInt IntPoly::content() const {
    BigInt g = 0;
    for (const auto& c : coeffs_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

IntPoly& IntPoly::operator+=(const IntPoly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
    trim();
    return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
    trim();
    return *this;
}

IntPoly& IntPoly::operator*=(const IntPoly& rhs) {
    *this = *this * rhs;
    return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            mpz_addmul(out[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
        }
    }
    return IntPoly(std::move(out));
}

IntPoly operator-(IntPoly a) {
    for (auto& c : a.coeffs_) c = -c;
    return a;
}

std::string IntPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        const BigInt& c = coeffs_[k];
        if (c == 0) continue;
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        const BigInt mag = abs(c);
        if (k == 0 || mag != 1) os << mag.get_str();
        if (k == 0) continue;
        if (mag != 1) os << "*";
        os << "z";
        if (k > 1) os << "^" << k;
    }
    return os.str();
}

std::vector<std::string> IntPoly::to_decimal_strings() const {
    std::vector<std::string> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(c.get_str());
    return out;
}

IntPoly add(const IntPoly& a, const IntPoly& b) { return a + b; }
IntPoly sub(const IntPoly& a, const IntPoly& b) { return a - b; }
IntPoly mul(const IntPoly& a, const IntPoly& b) { return a * b; }

IntPoly scale(const IntPoly& a, const BigInt& k) {
    std::vector<BigInt> v = a.coeffs();
    for (auto& c : v) c *= k;
    return IntPoly(std::move(v));
}

IntPoly exact_div(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) throw InputError("exact_div: division by the zero polynomial");
    if (a.is_zero()) return {};
    if (a.degree() < b.degree()) {
        throw DivisionInexact("exact_div: dividend degree below divisor degree");
    }
    std::vector<BigInt> rem = a.coeffs();
    const auto& bc = b.coeffs();
    const BigInt& lead = b.leading();
    const int db = b.degree();
    std::vector<BigInt> q(static_cast<std::size_t>(a.degree() - db) + 1);
    for (int k = a.degree() - db; k >= 0; --k) {
        BigInt& top = rem[static_cast<std::size_t>(k + db)];
        if (top == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t())) {
            throw DivisionInexact("exact_div: quotient is not integral");
        }
        BigInt t;
        mpz_divexact(t.get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
        for (int j = 0; j <= db; ++j) {
            auto idx = static_cast<std::size_t>(k + j);
            mpz_submul(rem[idx].get_mpz_t(), t.get_mpz_t(), bc[static_cast<std::size_t>(j)].get_mpz_t());
        }
        q[static_cast<std::size_t>(k)] = std::move(t);
    }
    for (const auto& r : rem) {
        if (r != 0) throw DivisionInexact("exact_div: nonzero remainder");
    }
    return IntPoly(std::move(q));
}

IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) throw InputError("pseudo_remainder: zero divisor");
    std::vector<BigInt> rem = a.coeffs();
    const auto& bc = b.coeffs();
    const BigInt& lead = b.leading();
    const int db = b.degree();
    for (int top = static_cast<int>(rem.size()) - 1; top >= db; --top) {
        BigInt t = rem[static_cast<std::size_t>(top)];
        for (auto& r : rem) r *= lead;
        for (int j = 0; j <= db; ++j) {
            auto idx = static_cast<std::size_t>(top - db + j);
            mpz_submul(rem[idx].get_mpz_t(), t.get_mpz_t(), bc[static_cast<std::size_t>(j)].get_mpz_t());
        }
        rem.resize(static_cast<std::size_t>(top));
    }
    return IntPoly(std::move(rem));
}

IntPoly primitive_normalize(const IntPoly& a) {
    if (a.is_zero()) throw InputError("primitive_normalize: zero polynomial");
    std::vector<BigInt> v = a.coeffs();
    BigInt g = a.content();
    if (a.leading() < 0) g = -g;
    for (auto& c : v) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    return IntPoly(std::move(v));
}

IntPoly gcd(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() && b.is_zero()) return {};
    if (a.is_zero()) return primitive_normalize(b);
    if (b.is_zero()) return primitive_normalize(a);
    IntPoly x = primitive_normalize(a);
    IntPoly y = primitive_normalize(b);
    if (x.degree() < y.degree()) std::swap(x, y);
    while (!y.is_zero()) {
        IntPoly r = pseudo_remainder(x, y);
        x = std::move(y);
        y = r.is_zero() ? IntPoly{} : primitive_normalize(r);
    }
    // Both inputs were primitive, so the gcd content is 1.
    return x;
}

std::vector<IntPoly> square_free_decomposition(const IntPoly& a) {
    if (a.is_zero()) throw InputError("square_free_decomposition: zero polynomial");
    // Musser's scheme. Every divisor below is primitive, so by Gauss's lemma the
    // quotients stay in Z[z] and exact_div applies.
    std::vector<IntPoly> out;
    IntPoly f = primitive_normalize(a);
    if (f.degree() == 0) return out;
    IntPoly c = gcd(f, f.derivative());
    IntPoly w = exact_div(f, c);
    while (w.degree() > 0) {
        IntPoly y = gcd(w, c);
        out.push_back(primitive_normalize(exact_div(w, y)));
        w = primitive_normalize(y);
        c = exact_div(c, y);
    }
    return out;
}

IntPoly square_free_part(const IntPoly& a) {
    IntPoly out{1};
    for (const auto& f : square_free_decomposition(a)) out *= f;
    return primitive_normalize(out);
}

int root_multiplicity(const IntPoly& a, const BigInt& x) {
    if (a.is_zero()) throw InputError("root_multiplicity: zero polynomial");
    IntPoly lin(std::vector<BigInt>{-x, 1});
    IntPoly cur = a;
    int m = 0;
    while (cur.eval(x) == 0) {
        cur = exact_div(cur, lin);
        ++m;
    }
    return m;
}

}  // namespace qtree
