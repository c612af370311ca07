#include "oracles.hpp"
#include "qtree/errors.hpp"
#include "qtree/poly.hpp"
#include "qtree/poly_matrix.hpp"

#include <doctest.h>

using qtree::BigInt;
using qtree::IntPoly;

TEST_CASE("zero polynomial") {
    IntPoly z;
    CHECK(z.is_zero());
    CHECK(z.degree() == -1);
    CHECK(z.to_string() == "0");
    CHECK_THROWS_AS((void)z.leading(), qtree::InputError);
    CHECK(IntPoly({0, 0, 0}).is_zero());
}

TEST_CASE("construction trims and formats") {
    IntPoly p{-4, 0, 20, 0};
    CHECK(p.degree() == 2);
    CHECK(p.to_string() == "-4 + 20*z^2");
    CHECK(IntPoly{0, -4, 0, 20}.to_string() == "-4*z + 20*z^3");
    CHECK(IntPoly{1, 0, 0, -1}.to_string() == "1 - z^3");
    CHECK(IntPoly{0, 1}.to_string() == "z");
    CHECK(IntPoly::monomial(3, 4).to_string() == "3*z^4");
    CHECK(p.coeff(7) == 0);
}

TEST_CASE("arithmetic on small cases") {
    IntPoly a{1, 1};
    IntPoly b{-1, 1};
    CHECK(a * b == IntPoly{-1, 0, 1});
    CHECK(a + b == IntPoly{0, 2});
    CHECK(a - b == IntPoly{2});
    CHECK((a - a).is_zero());
    CHECK(qtree::scale(a, 0).is_zero());
    CHECK(IntPoly{2, 0, 3}.eval(BigInt(2)) == 14);
}

TEST_CASE("derivative and reflect") {
    IntPoly p{5, 3, 0, 2};
    CHECK(p.derivative() == IntPoly{3, 0, 6});
    CHECK(p.reflect() == IntPoly{5, -3, 0, -2});
}

TEST_CASE("ring axioms on random polynomials") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 300; ++trial) {
        auto a = oracle::random_poly(rng, 6, 50);
        auto b = oracle::random_poly(rng, 6, 50);
        auto c = oracle::random_poly(rng, 6, 50);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == IntPoly{});
        CHECK(a * IntPoly{1} == a);
        // eval is a ring homomorphism
        BigInt x(trial % 7 - 3);
        CHECK((a * b).eval(x) == a.eval(x) * b.eval(x));
    }
}

TEST_CASE("exact division") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        auto a = oracle::random_poly(rng, 5, 30);
        auto b = oracle::random_poly(rng, 4, 30);
        if (b.is_zero()) continue;
        CHECK(qtree::exact_div(a * b, b) == a);
    }
    CHECK_THROWS_AS(qtree::exact_div(IntPoly{1, 0, 1}, IntPoly{1, 1}), qtree::DivisionInexact);
    CHECK_THROWS_AS(qtree::exact_div(IntPoly{1, 2}, IntPoly{0, 2}), qtree::DivisionInexact);
    CHECK_THROWS_AS(qtree::exact_div(IntPoly{1}, IntPoly{}), qtree::InputError);
}

TEST_CASE("primitive normalization") {
    CHECK(qtree::primitive_normalize(IntPoly{4, 0, -20}) == IntPoly{-1, 0, 5});
    CHECK(qtree::primitive_normalize(IntPoly{0, -4, 0, 20}) == IntPoly{0, -1, 0, 5});
    CHECK(qtree::primitive_normalize(IntPoly{-7}) == IntPoly{1});
    CHECK_THROWS(qtree::primitive_normalize(IntPoly{}));
    CHECK(IntPoly{6, -9, 12}.content() == 3);
}

TEST_CASE("gcd") {
    IntPoly f{-1, 1};  // z - 1
    IntPoly g{1, 1};   // z + 1
    IntPoly h{0, 2};   // 2z
    auto d = qtree::gcd(f * f * g * IntPoly{3}, f * h);
    CHECK(d == f);
    CHECK(qtree::gcd(f, g) == IntPoly{1});
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        auto a = oracle::random_poly(rng, 3, 9);
        auto b = oracle::random_poly(rng, 3, 9);
        auto c = oracle::random_poly(rng, 3, 9);
        if (a.is_zero() || b.is_zero() || c.is_zero() || c.degree() < 1) continue;
        auto d2 = qtree::gcd(a * c, b * c);
        // c divides the gcd
        CHECK_NOTHROW(qtree::exact_div(d2, qtree::primitive_normalize(c)));
        CHECK(d2.degree() >= c.degree());
    }
}

TEST_CASE("square-free decomposition") {
    IntPoly a{-1, 1};
    IntPoly b{1, 1};
    IntPoly c{1, 0, 1};
    auto p = IntPoly{5} * a * b * b * c * c * c;
    auto parts = qtree::square_free_decomposition(p);
    REQUIRE(parts.size() >= 3);
    CHECK(qtree::primitive_normalize(parts[0]) == qtree::primitive_normalize(a));
    CHECK(qtree::primitive_normalize(parts[1]) == qtree::primitive_normalize(b));
    CHECK(qtree::primitive_normalize(parts[2]) == qtree::primitive_normalize(c));
    CHECK(qtree::primitive_normalize(qtree::square_free_part(p)) == qtree::primitive_normalize(a * b * c));
    CHECK(qtree::root_multiplicity(p, BigInt(-1)) == 2);
    CHECK(qtree::root_multiplicity(p, BigInt(1)) == 1);
    CHECK(qtree::root_multiplicity(p, BigInt(0)) == 0);
}

TEST_CASE("decimal strings survive values beyond 64 bits") {
    BigInt big("123456789012345678901234567890");
    IntPoly p({big, BigInt(-1)});
    auto s = p.to_decimal_strings();
    CHECK(s[0] == "123456789012345678901234567890");
    CHECK(s[1] == "-1");
}

TEST_CASE("Bareiss determinant matches cofactor expansion") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 150; ++trial) {
        const int n = 1 + trial % 4;
        std::vector<std::vector<IntPoly>> m(n, std::vector<IntPoly>(n));
        for (auto& row : m)
            for (auto& e : row) e = oracle::random_poly(rng, 2, 5);
        CHECK(qtree::det_poly_matrix(m) == oracle::cofactor_det(m));
    }
}

TEST_CASE("Bareiss determinant edge cases") {
    CHECK(qtree::det_poly_matrix(std::vector<std::vector<IntPoly>>{}) == IntPoly{1});
    // zero leading pivot forces a row swap
    std::vector<std::vector<IntPoly>> m{{IntPoly{}, IntPoly{1}}, {IntPoly{1}, IntPoly{0, 1}}};
    CHECK(qtree::det_poly_matrix(m) == IntPoly{-1});
    std::vector<std::vector<IntPoly>> singular{{IntPoly{0, 1}, IntPoly{0, 2}}, {IntPoly{1}, IntPoly{2}}};
    CHECK(qtree::det_poly_matrix(singular).is_zero());
    CHECK_THROWS_AS(qtree::PolyMatrix(std::vector<std::vector<IntPoly>>{{IntPoly{1}, IntPoly{2}}}),
                    qtree::InputError);
}
