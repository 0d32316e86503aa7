#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <random>
#include <set>

#include "aperimet/diffraction.hpp"
#include "aperimet/errors.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"

using namespace aperimet;

namespace {

// Reflections of a module point across the four mirror axes (x, y, both
// diagonals), expressed on lattice coefficients. Derived from the action on
// the direct coordinates (x, y) = (n1 + (n2-n4)s, n3 + (n2+n4)s).
LatticeVector mirror_module(int axis, const LatticeVector& n) {
    switch (axis) {
        case 0: return {n[0], -n[3], -n[2], -n[1]};  // (x, -y)
        case 1: return {-n[0], n[3], n[2], n[1]};    // (-x, y)
        case 2: return {n[2], n[1], n[0], -n[3]};    // (y, x)
        default: return {-n[2], -n[1], -n[0], n[3]}; // (-y, -x)
    }
}

double module_kx(const LatticeVector& n) {
    return direct_image(n).x.to_double() * 0.5;
}
double module_ky(const LatticeVector& n) {
    return direct_image(n).y.to_double() * 0.5;
}

// Internal-space coordinates of the peak: the window transform (and hence
// the closed form, which describes it) is evaluated at half the conjugated
// image, not at the physical wave vector.
double star_kx(const LatticeVector& n) {
    return star_image(n).x.to_double() * 0.5;
}
double star_ky(const LatticeVector& n) {
    return star_image(n).y.to_double() * 0.5;
}

} // namespace

TEST_SUITE("diffraction") {

TEST_CASE("mirror images keep the module norm and invert correctly") {
    std::mt19937_64 rng(51);
    for (int i = 0; i < 200; ++i) {
        const LatticeVector n = tests::random_lattice_vector(rng, 5);
        for (int a = 0; a < 4; ++a) {
            const LatticeVector m = mirror_module(a, n);
            CHECK(mirror_module(a, m) == n);
            const double r0 = module_kx(n) * module_kx(n) + module_ky(n) * module_ky(n);
            const double r1 = module_kx(m) * module_kx(m) + module_ky(m) * module_ky(m);
            CHECK(r0 == doctest::Approx(r1).epsilon(1e-12));
        }
        // Axis 0 composed with axis 1 is the inversion.
        CHECK(mirror_module(0, mirror_module(1, n)) == -n);
    }
}

TEST_CASE("central intensity is the squared point density") {
    CHECK(intensity(tests::reference_left_window(), {0, 0, 0, 0}) ==
          doctest::Approx(14.0625).epsilon(1e-12));
    CHECK(intensity(tests::reference_right_window(), {0, 0, 0, 0}) ==
          doctest::Approx(14.0625).epsilon(1e-12));
    CHECK(intensity(Polyomino({{0, 0}}), {0, 0, 0, 0}) == doctest::Approx(0.0625));
}

TEST_CASE("unit-cell window: separable sinc intensity at the first module points") {
    const Polyomino cell({{0, 0}});
    const double s = 2.0 / std::numbers::pi; // sinc(1/2)
    CHECK(intensity(cell, {1, 0, 0, 0}) == doctest::Approx(0.0625 * s * s).epsilon(1e-12));
    CHECK(intensity(cell, {0, 0, 1, 0}) == doctest::Approx(0.0625 * s * s).epsilon(1e-12));
}

TEST_CASE("intensity is inversion-symmetric bit for bit") {
    const Polyomino w = tests::reference_left_window();
    std::mt19937_64 rng(52);
    for (int i = 0; i < 500; ++i) {
        const LatticeVector n = tests::random_lattice_vector(rng, 9);
        CHECK(intensity(w, n) == intensity(w, -n));
    }
}

TEST_CASE("intensity is nonnegative and translation-invariant") {
    const Polyomino w = tests::reference_left_window();
    std::mt19937_64 rng(53);
    for (int i = 0; i < 300; ++i) {
        const LatticeVector n = tests::random_lattice_vector(rng, 7);
        const double v = intensity(w, n);
        CHECK(v >= 0.0);
        CHECK(v <= 14.0625 + 1e-12);
        CHECK(v == doctest::Approx(intensity(w.translated(3, -1), n)).epsilon(1e-9));
    }
}

TEST_CASE("closed form: value 225 at the origin, factor structure") {
    CHECK(closed_form_f(0.0, 0.0) == doctest::Approx(225.0).epsilon(1e-14));
    CHECK(closed_form_intensity(0.0, 0.0) == doctest::Approx(14.0625).epsilon(1e-14));
    // Both factors are even in their leading argument along the axes.
    CHECK(closed_form_f(0.3, 0.0) == doctest::Approx(closed_form_f(-0.3, 0.0)).epsilon(1e-12));
    // The closed form inherits inversion symmetry.
    std::mt19937_64 rng(54);
    std::uniform_real_distribution<double> d(-3.0, 3.0);
    for (int i = 0; i < 500; ++i) {
        const double k = d(rng), l = d(rng);
        CHECK(closed_form_f(k, l) == doctest::Approx(closed_form_f(-k, -l)).epsilon(1e-9));
        CHECK(closed_form_intensity(k, l) >= -1e-12);
    }
}

TEST_CASE("both reference windows realize the closed-form intensity") {
    const PlacementMatch ml = verify_closed_form(tests::reference_left_window());
    CHECK(ml.max_rel_error <= 1e-9);
    const PlacementMatch mr = verify_closed_form(tests::reference_right_window());
    CHECK(mr.max_rel_error <= 1e-9);

    // With the matched placement applied, the agreement holds on module
    // vectors directly.
    const Polyomino placed = tests::reference_left_window().transformed(ml.isometry);
    std::mt19937_64 rng(55);
    for (int i = 0; i < 100; ++i) {
        const LatticeVector n = tests::random_lattice_vector(rng, 4);
        const double a = intensity(placed, n);
        const double b = closed_form_intensity(star_kx(n), star_ky(n));
        CHECK(std::abs(a - b) <= 1e-9 * std::max({std::abs(a), std::abs(b), 1e-3}));
    }
}

TEST_CASE("a perturbed window no longer matches the closed form") {
    auto cells = tests::reference_left_cells();
    cells.back() = {4, 4}; // still connected, different shape
    CHECK_THROWS_AS((void)verify_closed_form(Polyomino(cells)), NoPlacementMatches);
    try {
        (void)verify_closed_form(Polyomino(cells));
    } catch (const NoPlacementMatches& e) {
        CHECK(e.best_error > 1e-2);
    }
}

TEST_CASE("peak list: cutoffs respected, sorted, central peak present") {
    const Polyomino w = tests::reference_left_window();
    const PeakList list = peak_list(w, 3.0, 1e-3);
    CHECK(list.k_max == 3.0);
    CHECK(list.intensity_min == 1e-3);
    CHECK(list.r_star > 0.0);
    REQUIRE(!list.peaks.empty());
    CHECK(list.peaks.front().n == LatticeVector(0, 0, 0, 0));
    CHECK(list.peaks.front().intensity == doctest::Approx(14.0625).epsilon(1e-12));

    std::set<LatticeVector> seen;
    double prev = -1.0;
    for (const BraggPeak& p : list.peaks) {
        CHECK(seen.insert(p.n).second); // no duplicates
        const double r2 = p.kx * p.kx + p.ky * p.ky;
        CHECK(r2 <= 9.0 + 1e-9);
        CHECK(p.intensity >= 1e-3);
        CHECK(p.kx == doctest::Approx(module_kx(p.n)).epsilon(1e-12));
        CHECK(p.ky == doctest::Approx(module_ky(p.n)).epsilon(1e-12));
        CHECK(r2 >= prev - 1e-9); // sorted by |k|
        prev = r2;
        // Recomputing the intensity from scratch reproduces the list entry.
        CHECK(p.intensity == doctest::Approx(intensity(w, p.n)).epsilon(1e-12));
    }
}

TEST_CASE("peak list is invariant under inversion with bit-equal intensities") {
    const PeakList list = peak_list(tests::reference_left_window(), 3.0, 1e-3);
    std::map<LatticeVector, double> by_n;
    for (const BraggPeak& p : list.peaks) by_n[p.n] = p.intensity;
    for (const BraggPeak& p : list.peaks) {
        const auto it = by_n.find(-p.n);
        REQUIRE(it != by_n.end());
        CHECK(it->second == p.intensity);
    }
}

TEST_CASE("no mirror line survives: each axis shows an intensity discrepancy") {
    const Polyomino w = tests::reference_left_window();
    const PeakList list = peak_list(w, 3.0, 1e-3);
    for (int axis = 0; axis < 4; ++axis) {
        double worst = 0.0;
        for (const BraggPeak& p : list.peaks) {
            const double mirrored = intensity(w, mirror_module(axis, p.n));
            worst = std::max(worst, std::abs(p.intensity - mirrored));
        }
        CHECK(worst > 1e-3);
    }
}

TEST_CASE("widened internal-space scan finds no additional peaks") {
    const Polyomino w = tests::reference_left_window();
    const PeakList base = peak_list(w, 2.0, 1e-3);
    const PeakList wide = peak_list(w, 2.0, 1e-3, 1.5);
    REQUIRE(base.peaks.size() == wide.peaks.size());
    for (std::size_t i = 0; i < base.peaks.size(); ++i) {
        CHECK(base.peaks[i].n == wide.peaks[i].n);
        CHECK(base.peaks[i].intensity == wide.peaks[i].intensity);
    }
}

TEST_CASE("homometric windows share the peak list") {
    const PeakList a = peak_list(tests::reference_left_window(), 2.0, 1e-3);
    const PeakList b = peak_list(tests::reference_right_window(), 2.0, 1e-3);
    REQUIRE(a.peaks.size() == b.peaks.size());
    for (std::size_t i = 0; i < a.peaks.size(); ++i) {
        CHECK(a.peaks[i].n == b.peaks[i].n);
        CHECK(std::abs(a.peaks[i].intensity - b.peaks[i].intensity) <= 1e-10);
    }
}

TEST_CASE("invalid cutoffs are rejected") {
    const Polyomino w({{0, 0}});
    CHECK_THROWS_AS((void)peak_list(w, 0.0, 1e-3), Error);
    CHECK_THROWS_AS((void)peak_list(w, 2.0, 0.0), Error);
    CHECK_THROWS_AS((void)peak_list(w, 2.0, -1.0), Error);
}

} // TEST_SUITE
