#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "aperimet/lattice.hpp"
#include "aperimet/quadratic.hpp"
#include "aperimet/rational.hpp"
#include "support/generators.hpp"

using namespace aperimet;

TEST_SUITE("quadring") {

TEST_CASE("rational arithmetic normalizes and orders") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-3, -6) == Rational(1, 2));
    CHECK(Rational(3, -6) == Rational(-1, 2));
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(1, 3) * Rational(3, 5) == Rational(1, 5));
    CHECK(Rational(7, 2) / Rational(7, 2) == Rational(1));
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(-1, 3));
    CHECK(Rational(5, 2).floor() == 2);
    CHECK(Rational(-5, 2).floor() == -3);
    CHECK(Rational(-4, 2).floor() == -2);
    CHECK(Rational(1, 4).str() == "1/4");
    CHECK(Rational(-6, 3).str() == "-2");
    CHECK_THROWS(Rational(1, 0));
}

TEST_CASE("sign of a + b*sqrt2 agrees with floating point away from zero") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<std::int64_t> d(-1000000, 1000000);
    for (int i = 0; i < 100000; ++i) {
        const std::int64_t a = d(rng), b = d(rng);
        const double v = static_cast<double>(a) + static_cast<double>(b) * std::numbers::sqrt2;
        // Integer pairs of this size keep |a + b*sqrt2| well above double error.
        if (std::abs(v) < 1e-4) continue;
        CHECK(sign_a_plus_b_sqrt2(a, b) == (v > 0 ? 1 : -1));
    }
    CHECK(sign_a_plus_b_sqrt2(0, 0) == 0);
}

TEST_CASE("sign is exact on Pell convergent near-misses") {
    // 577/408 and 1393/985 straddle sqrt2; doubles get these right but the
    // margin shrinks with the convergents, so assert the exact path.
    CHECK(sign_a_plus_b_sqrt2(577, -408) == 1);   // 577 > 408*sqrt2
    CHECK(sign_a_plus_b_sqrt2(-577, 408) == -1);
    CHECK(sign_a_plus_b_sqrt2(1393, -985) == -1); // 1393 < 985*sqrt2
    CHECK(sign_a_plus_b_sqrt2(-1393, 985) == 1);
    CHECK(sign_a_plus_b_sqrt2(665857, -470832) == 1);
}

TEST_CASE("quadratic integer ring operations") {
    const QuadInt a{3, -2}, b{-1, 5};
    CHECK(a + b == QuadInt{2, 3});
    CHECK(a - b == QuadInt{4, -7});
    // (3 - 2 s)(-1 + 5 s) = -3 + 15 s + 2 s - 10 s^2 = -23 + 17 s
    CHECK(a * b == QuadInt{-23, 17});
    CHECK((a * b).conj() == a.conj() * b.conj());
    CHECK(doctest::Approx(a.to_double() * b.to_double()).epsilon(1e-12) ==
          (a * b).to_double());
    CHECK(QuadInt{1, 1}.sign() == 1);
    CHECK(QuadInt{-1, 1}.sign() == 1);  // sqrt2 > 1
    CHECK(QuadInt{-2, 1}.sign() == -1); // sqrt2 < 2
}

TEST_CASE("half-integer coordinates close under the lattice operations") {
    const QuadHalf h{3, 1}; // (3 + sqrt2)/2
    CHECK((h + h) == QuadHalf{6, 2});
    CHECK((h - h).is_zero());
    CHECK((-h).sign() == -1);
    CHECK(h.conj() == QuadHalf{3, -1});
    CHECK(QuadHalf::from_int(5) == QuadHalf{10, 0});
    // Scaling by a ring element stays in the half module.
    CHECK(h * QuadInt{0, 1} == QuadHalf{2, 3}); // (3+s)/2 * s = (2 + 3 s)/2
    CHECK(QuadHalf{1, 0} < QuadHalf{0, 1});     // 1/2 < sqrt2/2
}

TEST_CASE("general quadratic rationals: arithmetic, floor, comparisons") {
    const QuadRat x(1, 1, 3); // (1 + sqrt2)/3
    const QuadRat y(2, -1, 2);
    CHECK(x + y == QuadRat(8, -1, 6));
    CHECK(x * y == QuadRat(0, 1, 6)); // (1+s)(2-s) = 2+s-2 = s, /6
    CHECK((x - x).is_zero());
    CHECK(x.conj() == QuadRat(1, -1, 3));
    CHECK(QuadRat(4, 0, 2) == QuadRat(2, 0, 1)); // normalization
    CHECK(QuadRat(1, 0, -2) == QuadRat(-1, 0, 2));

    std::mt19937_64 rng(12);
    std::uniform_int_distribution<std::int64_t> d(-500, 500);
    std::uniform_int_distribution<std::int64_t> dd(1, 9);
    for (int i = 0; i < 2000; ++i) {
        const QuadRat v(d(rng), d(rng), dd(rng));
        const std::int64_t f = v.floor();
        CHECK(v.cmp_int(f) >= 0);     // f <= v
        CHECK(v.cmp_int(f + 1) < 0);  // v < f+1
        CHECK(f == static_cast<std::int64_t>(std::floor(v.to_double())));
    }
}

TEST_CASE("basis column images match the scheme definition") {
    const QuadHalf one{2, 0}, zero{0, 0}, s{0, 1}, ms{0, -1};
    // Column 1 -> direct (1,0), internal (1,0).
    CHECK(direct_image({1, 0, 0, 0}) == Vec2H{one, zero});
    CHECK(star_image({1, 0, 0, 0}) == Vec2H{one, zero});
    // Column 2 -> direct (s,s), internal (-s,-s), s = sqrt2/2.
    CHECK(direct_image({0, 1, 0, 0}) == Vec2H{s, s});
    CHECK(star_image({0, 1, 0, 0}) == Vec2H{ms, ms});
    // Column 3 -> direct (0,1), internal (0,1).
    CHECK(direct_image({0, 0, 1, 0}) == Vec2H{zero, one});
    CHECK(star_image({0, 0, 1, 0}) == Vec2H{zero, one});
    // Column 4 -> direct (-s,s), internal (s,-s).
    CHECK(direct_image({0, 0, 0, 1}) == Vec2H{ms, s});
    CHECK(star_image({0, 0, 0, 1}) == Vec2H{s, ms});
}

TEST_CASE("star map is coordinate-wise sqrt2 conjugation of the direct image") {
    std::mt19937_64 rng(13);
    for (int i = 0; i < 10000; ++i) {
        const LatticeVector v = tests::random_lattice_vector(rng, 1000000);
        const Vec2H d = direct_image(v), st = star_image(v);
        CHECK(st.x == d.x.conj());
        CHECK(st.y == d.y.conj());
    }
}

TEST_CASE("closed-form projections agree with generic matrix multiplication") {
    std::mt19937_64 rng(14);
    for (int i = 0; i < 10000; ++i) {
        const LatticeVector v = tests::random_lattice_vector(rng, 1000000);
        const auto m = matrix_image(v);
        const Vec2H d = direct_image(v), st = star_image(v);
        CHECK(m[0] == d.x);
        CHECK(m[1] == d.y);
        CHECK(m[2] == st.x);
        CHECK(m[3] == st.y);
    }
}

TEST_CASE("projections are additive") {
    std::mt19937_64 rng(15);
    for (int i = 0; i < 1000; ++i) {
        const LatticeVector a = tests::random_lattice_vector(rng, 100000);
        const LatticeVector b = tests::random_lattice_vector(rng, 100000);
        const Vec2H da = direct_image(a), db = direct_image(b), ds = direct_image(a + b);
        CHECK(ds.x == da.x + db.x);
        CHECK(ds.y == da.y + db.y);
        const Vec2H n = direct_image(-a);
        CHECK(n.x == -da.x);
        CHECK(n.y == -da.y);
    }
}

TEST_CASE("scheme constants: determinant 4, gram 2I, density 1/4, dual scale 1/2") {
    const QuadRat det = basis_determinant();
    CHECK(det.abs() == QuadRat(4, 0, 1));
    const auto gram = basis_gram();
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            CHECK(gram[i][j] == (i == j ? QuadRat(2, 0, 1) : QuadRat(0, 0, 1)));
    CHECK(scheme_constants().lattice_density == Rational(1, 4));
    CHECK(scheme_constants().dual_scale == Rational(1, 2));
}

TEST_CASE("coefficient solve inverts the embedding and rejects non-lattice input") {
    std::mt19937_64 rng(16);
    for (int i = 0; i < 1000; ++i) {
        const LatticeVector v = tests::random_lattice_vector(rng, 1000000);
        const auto back = solve_coefficients(direct_image(v), star_image(v));
        REQUIRE(back.has_value());
        CHECK(*back == v);
    }
    // (1/2, 0 | 1/2, 0) solves to half-integer coefficients: not a lattice point.
    const Vec2H half{QuadHalf{1, 0}, QuadHalf{0, 0}};
    CHECK_FALSE(solve_coefficients(half, half).has_value());
    // Mismatched conjugate: direct of e2 paired with internal of e3.
    CHECK_FALSE(solve_coefficients(direct_image({0, 1, 0, 0}), star_image({0, 0, 1, 0}))
                    .has_value());
}

TEST_CASE("half-module points carry denominator 4 at most") {
    std::mt19937_64 rng(17);
    for (int i = 0; i < 1000; ++i) {
        const LatticeVector v = tests::random_lattice_vector(rng, 1000);
        const Vec2R k = direct_on_half_module(v);
        const Vec2R ks = star_on_half_module(v);
        CHECK(k.x.den <= 4);
        CHECK(ks.x == k.x.conj());
        CHECK(ks.y == k.y.conj());
        CHECK(doctest::Approx(k.x.to_double()).epsilon(1e-12) ==
              direct_image(v).x.to_double() / 2);
    }
}

TEST_CASE("overflow in coordinate arithmetic raises instead of wrapping") {
    CHECK_THROWS_AS((void)(QuadInt{INT64_MAX, 0} + QuadInt{1, 0}), std::overflow_error);
    CHECK_THROWS_AS((void)(QuadHalf{INT64_MAX, 1} * QuadInt{2, 0}), std::overflow_error);
}

} // TEST_SUITE
