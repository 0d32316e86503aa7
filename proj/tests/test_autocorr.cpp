#include <doctest.h>

#include <cmath>
#include <numbers>

#include "aperimet/autocorr.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"

using namespace aperimet;

TEST_SUITE("autocorrelation") {

TEST_CASE("coefficient at zero is window area over 4") {
    CHECK(eta(Polyomino({{0, 0}}), {0, 0, 0, 0}) == QuadRat(1, 0, 4));
    CHECK(eta(tests::reference_left_window(), {0, 0, 0, 0}) == QuadRat(15, 0, 4));
    CHECK(eta(tests::reference_right_window(), {0, 0, 0, 0}) == QuadRat(15, 0, 4));
}

TEST_CASE("coefficients are symmetric and vanish at large internal displacement") {
    const Polyomino w = tests::reference_left_window();
    std::mt19937_64 rng(41);
    for (int i = 0; i < 300; ++i) {
        const LatticeVector x = tests::random_lattice_vector(rng, 4);
        CHECK(eta(w, x) == eta(w, -x));
        CHECK(eta(w, x).sign() >= 0);
        CHECK((eta(w, x) - eta(w, {0, 0, 0, 0})).sign() <= 0); // eta(0) is maximal
    }
    // Star image (9, 0) lies far outside the 15-cell window.
    CHECK(eta(w, {9, 0, 0, 0}).is_zero());
}

TEST_CASE("coefficient equals a quarter of the window covariogram at the star image") {
    const Polyomino w = tests::reference_left_window();
    // x = e1 has star image (1, 0), a rational displacement.
    const QuadRat expected =
        covariogram_eval(w, QuadRat(1, 0, 1), QuadRat(0, 0, 1)) * QuadRat(1, 0, 4);
    CHECK(eta(w, {1, 0, 0, 0}) == expected);
    // x = e2 has star image (-s, -s) with s = sqrt2/2.
    const QuadRat s(0, -1, 2);
    const QuadRat expected2 = covariogram_eval(w, s, s) * QuadRat(1, 0, 4);
    CHECK(eta(w, {0, 1, 0, 0}) == expected2);
}

TEST_CASE("empirical weights: normalization, symmetry, agreement with the exact law") {
    const Polyomino w = tests::reference_left_window();
    const ModelSetPatch p = generate_patch(w, 20.0);
    const EmpiricalAutocorrelation e = empirical_autocorrelation(p, 6.0);
    const double norm = std::numbers::pi * 400.0;

    CHECK(e.radius == 20.0);
    CHECK(e.weight({0, 0, 0, 0}) ==
          doctest::Approx(static_cast<double>(p.points.size()) / norm));
    // Pair differences come in +-d pairs with identical counts.
    for (const auto& [d, wgt] : e.weights) {
        CHECK(e.weight(-d) == wgt);
        CHECK(wgt > 0.0);
        CHECK(wgt <= e.weight({0, 0, 0, 0}) + 1e-12);
    }
    // Finite-size error: both ball centers must land in B_r, so the count
    // under-shoots by about eta * 2|d|/(pi r); at r = 20 with |d| <= 6 sqrt2
    // that allows deviations up to ~0.5. Bound loosely here; the tight 0.5
    // bound at r = 50 is asserted by the acceptance run.
    const auto top = top_weights(e, 20);
    REQUIRE(top.size() == 20);
    CHECK(top[0].first == LatticeVector(0, 0, 0, 0));
    for (const auto& [d, wgt] : top)
        CHECK(std::abs(wgt - eta(w, d).to_double()) < 0.8);
}

TEST_CASE("top weights are sorted descending with deterministic tie order") {
    const ModelSetPatch p = generate_patch(tests::reference_left_window(), 12.0);
    const EmpiricalAutocorrelation e = empirical_autocorrelation(p, 5.0);
    const auto top = top_weights(e, 50);
    REQUIRE(top.size() == 50);
    for (std::size_t i = 1; i < top.size(); ++i) {
        CHECK(top[i - 1].second >= top[i].second);
        if (top[i - 1].second == top[i].second) CHECK(top[i - 1].first < top[i].first);
    }
    CHECK(top_weights(e, 3).size() == 3);
}

TEST_CASE("difference-box restriction agrees with the all-pairs evaluation") {
    const ModelSetPatch p = generate_patch(tests::reference_left_window(), 6.0);
    const EmpiricalAutocorrelation full = empirical_autocorrelation(p);
    const EmpiricalAutocorrelation boxed = empirical_autocorrelation(p, 4.0);
    for (const auto& [d, wgt] : full.weights) {
        const Vec2H dd = direct_image(d);
        const double dx = std::abs(dd.x.to_double()), dy = std::abs(dd.y.to_double());
        if (dx < 3.99 && dy < 3.99) CHECK(boxed.weight(d) == wgt);
        if (dx > 4.01 || dy > 4.01) CHECK(boxed.weight(d) == 0.0);
    }
    for (const auto& [d, wgt] : boxed.weights) CHECK(full.weight(d) == wgt);
}

TEST_CASE("homometry decision by covariogram equality") {
    CHECK(homometric(tests::reference_left_window(), tests::reference_right_window()));
    CHECK_FALSE(homometric(tests::reference_left_window(), Polyomino({{0, 0}})));
    CHECK_FALSE(homometric(Polyomino({{0, 0}, {1, 0}, {1, 1}}),
                           Polyomino({{0, 0}, {1, 0}, {2, 0}})));
}

} // TEST_SUITE
