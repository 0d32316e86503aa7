// The rank-4 embedding lattice of the octagonal cut-and-project scheme:
// basis matrix, direct/internal projections, the sqrt2-conjugation star map,
// and the dual-lattice constants.
#ifndef APERIMET_LATTICE_HPP
#define APERIMET_LATTICE_HPP

#include <array>
#include <cstdint>
#include <functional>
#include <optional>

#include "aperimet/quadratic.hpp"

namespace aperimet {

// Integer coefficients with respect to the four basis columns.
struct LatticeVector {
    std::array<std::int64_t, 4> n{0, 0, 0, 0};

    LatticeVector() = default;
    LatticeVector(std::int64_t n1, std::int64_t n2, std::int64_t n3, std::int64_t n4)
        : n{n1, n2, n3, n4} {}

    friend LatticeVector operator+(const LatticeVector& a, const LatticeVector& b) {
        return {checked_i64(int128(a.n[0]) + b.n[0]), checked_i64(int128(a.n[1]) + b.n[1]),
                checked_i64(int128(a.n[2]) + b.n[2]), checked_i64(int128(a.n[3]) + b.n[3])};
    }
    friend LatticeVector operator-(const LatticeVector& a, const LatticeVector& b) {
        return {checked_i64(int128(a.n[0]) - b.n[0]), checked_i64(int128(a.n[1]) - b.n[1]),
                checked_i64(int128(a.n[2]) - b.n[2]), checked_i64(int128(a.n[3]) - b.n[3])};
    }
    LatticeVector operator-() const { return {-n[0], -n[1], -n[2], -n[3]}; }

    std::int64_t operator[](std::size_t i) const { return n[i]; }

    friend bool operator==(const LatticeVector& a, const LatticeVector& b) { return a.n == b.n; }
    friend bool operator!=(const LatticeVector& a, const LatticeVector& b) { return a.n != b.n; }
    friend bool operator<(const LatticeVector& a, const LatticeVector& b) { return a.n < b.n; }

    bool is_zero() const { return n[0] == 0 && n[1] == 0 && n[2] == 0 && n[3] == 0; }
};

struct LatticeVectorHash {
    std::size_t operator()(const LatticeVector& v) const {
        std::uint64_t h = 0x9E3779B97F4A7C15ull;
        for (std::int64_t c : v.n) {
            h ^= static_cast<std::uint64_t>(c) + 0x9E3779B97F4A7C15ull + (h << 6) + (h >> 2);
            h *= 0xFF51AFD7ED558CCDull;
        }
        return static_cast<std::size_t>(h);
    }
};

// Exact 2-vector in direct or internal space.
struct Vec2H {
    QuadHalf x, y;
    friend bool operator==(const Vec2H& a, const Vec2H& b) { return a.x == b.x && a.y == b.y; }
};

// Exact 2-vector with general denominators (used for points of the half
// module, whose coordinates pick up a factor-4 denominator).
struct Vec2R {
    QuadRat x, y;
    friend bool operator==(const Vec2R& a, const Vec2R& b) { return a.x == b.x && a.y == b.y; }
};

// Direct projection: rows 1-2 of the basis matrix times n, simplified.
// Column images are (1,0), (s,s), (0,1), (-s,s) with s = sqrt2/2.
inline Vec2H direct_image(const LatticeVector& v) {
    return {QuadHalf(checked_i64(int128(2) * v.n[0]), checked_i64(int128(v.n[1]) - v.n[3])),
            QuadHalf(checked_i64(int128(2) * v.n[2]), checked_i64(int128(v.n[1]) + v.n[3]))};
}

// Internal projection (star map): rows 3-4 of the basis matrix times n.
// Equals sqrt2-conjugation of direct_image coordinate-wise; the generic
// matrix path below provides the independent cross-check.
inline Vec2H star_image(const LatticeVector& v) {
    return {QuadHalf(checked_i64(int128(2) * v.n[0]), checked_i64(int128(v.n[3]) - v.n[1])),
            QuadHalf(checked_i64(int128(2) * v.n[2]), checked_i64(-int128(v.n[1]) - v.n[3]))};
}

// Star map on the half module: the image of k = direct_image(n)/2 is
// star_image(n)/2, picking up denominator 4.
inline Vec2R star_on_half_module(const LatticeVector& v) {
    Vec2H s = star_image(v);
    return {QuadRat(s.x.p, s.x.q, 4), QuadRat(s.y.p, s.y.q, 4)};
}

inline Vec2R direct_on_half_module(const LatticeVector& v) {
    Vec2H d = direct_image(v);
    return {QuadRat(d.x.p, d.x.q, 4), QuadRat(d.y.p, d.y.q, 4)};
}

// Scheme constants: the 4x4 basis (exact), lattice density 1/4, dual scale
// 1/2 (the dual lattice has basis B/2, equivalently B^{-1} = B^T/2).
struct SchemeConstants {
    std::array<std::array<QuadHalf, 4>, 4> basis;
    Rational lattice_density;
    Rational dual_scale;
};

const SchemeConstants& scheme_constants();

// Full 4-vector image computed by generic exact matrix multiplication over
// the stored basis; rows 0-1 are the direct image, rows 2-3 the internal.
std::array<QuadHalf, 4> matrix_image(const LatticeVector& v);

// Exact determinant of the basis matrix (cofactor expansion over Q(sqrt2)).
QuadRat basis_determinant();

// Exact Gram matrix B B^T; the scheme satisfies B B^T = 2 I.
std::array<std::array<QuadRat, 4>, 4> basis_gram();

// Inverse embedding: integer n with B n = (direct, internal) if one exists.
// Uses B^{-1} = B^T/2 and rejects non-integral solutions.
std::optional<LatticeVector> solve_coefficients(const Vec2H& direct, const Vec2H& internal);

// Float views for radius cutoffs and plotting (never for membership).
inline double direct_norm2(const LatticeVector& v) {
    Vec2H d = direct_image(v);
    double x = d.x.to_double(), y = d.y.to_double();
    return x * x + y * y;
}
inline double star_norm2(const LatticeVector& v) {
    Vec2H s = star_image(v);
    double x = s.x.to_double(), y = s.y.to_double();
    return x * x + y * y;
}

} // namespace aperimet

#endif
