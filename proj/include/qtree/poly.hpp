#pragma once

#include <gmpxx.h>

#include <initializer_list>
#include <string>
#include <vector>

namespace qtree {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Dense univariate polynomial over Z in the spectral variable z.
///
/// Coefficients are stored in ascending degree with no trailing zeros, so the
/// zero polynomial is the empty sequence and has degree -1.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<BigInt> coeffs);
    IntPoly(std::initializer_list<long> coeffs);

    static IntPoly constant(const BigInt& c);
    /// c * z^k
    static IntPoly monomial(const BigInt& c, int k);
    static IntPoly z() { return monomial(1, 1); }

    [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
    [[nodiscard]] int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    [[nodiscard]] const std::vector<BigInt>& coeffs() const { return coeffs_; }
    /// Coefficient of z^k; zero beyond the degree.
    [[nodiscard]] BigInt coeff(int k) const;
    /// Requires a nonzero polynomial.
    [[nodiscard]] const BigInt& leading() const;

    [[nodiscard]] BigInt eval(const BigInt& x) const;
    [[nodiscard]] Rational eval(const Rational& x) const;
    [[nodiscard]] double eval(double x) const;

    [[nodiscard]] IntPoly derivative() const;
    /// P(-z)
    [[nodiscard]] IntPoly reflect() const;
    /// gcd of the coefficients, zero for the zero polynomial.
    [[nodiscard]] BigInt content() const;

    IntPoly& operator+=(const IntPoly& rhs);
    IntPoly& operator-=(const IntPoly& rhs);
    IntPoly& operator*=(const IntPoly& rhs);

    friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
    friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator-(IntPoly a);
    friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.coeffs_ == b.coeffs_; }

    /// Human-readable form `c0 + c1*z + c2*z^2`, zero terms omitted.
    [[nodiscard]] std::string to_string() const;
    /// Ascending decimal strings.
    [[nodiscard]] std::vector<std::string> to_decimal_strings() const;

private:
    void trim();

    std::vector<BigInt> coeffs_;
};

IntPoly add(const IntPoly& a, const IntPoly& b);
IntPoly sub(const IntPoly& a, const IntPoly& b);
IntPoly mul(const IntPoly& a, const IntPoly& b);
IntPoly scale(const IntPoly& a, const BigInt& k);

/// Quotient q with a == b * q in Z[z]. Throws DivisionInexact otherwise and
/// InputError when b is zero.
IntPoly exact_div(const IntPoly& a, const IntPoly& b);

/// Pseudo-remainder lc(b)^(deg a - deg b + 1) * a mod b, computed in Z[z].
IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b);

/// Content-free representative with positive leading coefficient. Two
/// polynomials are proportional over Q iff their primitive parts are equal.
IntPoly primitive_normalize(const IntPoly& a);

/// Monic-free gcd in Z[z], returned primitive with positive leading coefficient.
IntPoly gcd(const IntPoly& a, const IntPoly& b);

/// Square-free decomposition a = c * f1 * f2^2 * f3^3 ...; entry i holds the
/// primitive factor of multiplicity i+1 (possibly the constant 1).
std::vector<IntPoly> square_free_decomposition(const IntPoly& a);

/// Product of the distinct irreducible factors, primitive.
IntPoly square_free_part(const IntPoly& a);

/// Multiplicity of x as a root of a (0 when a(x) != 0).
int root_multiplicity(const IntPoly& a, const BigInt& x);

}  // namespace qtree
