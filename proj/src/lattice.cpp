#include "aperimet/lattice.hpp"

namespace aperimet {

namespace {

SchemeConstants make_constants() {
    SchemeConstants c;
    const QuadHalf one(2, 0);   // 1
    const QuadHalf zero(0, 0);  // 0
    const QuadHalf s(0, 1);     // sqrt2/2
    const QuadHalf ms(0, -1);   // -sqrt2/2
    // Columns are the four basis vectors; rows 0-1 direct, rows 2-3 internal.
    c.basis = {{
        {one, s, zero, ms},  // direct x
        {zero, s, one, s},   // direct y
        {one, ms, zero, s},  // internal x
        {zero, ms, one, ms}, // internal y
    }};
    c.lattice_density = Rational(1, 4);
    c.dual_scale = Rational(1, 2);
    return c;
}

} // namespace

const SchemeConstants& scheme_constants() {
    static const SchemeConstants c = make_constants();
    return c;
}

std::array<QuadHalf, 4> matrix_image(const LatticeVector& v) {
    const auto& B = scheme_constants().basis;
    std::array<QuadHalf, 4> out;
    for (int r = 0; r < 4; ++r) {
        QuadHalf acc(0, 0);
        for (int j = 0; j < 4; ++j) acc = acc + B[r][j] * v.n[j];
        out[r] = acc;
    }
    return out;
}

namespace {

QuadRat det3(const std::array<std::array<QuadRat, 3>, 3>& m) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
         - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
         + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

} // namespace

QuadRat basis_determinant() {
    const auto& B = scheme_constants().basis;
    QuadRat det(0, 0, 1);
    int sgn = 1;
    for (int col = 0; col < 4; ++col, sgn = -sgn) {
        std::array<std::array<QuadRat, 3>, 3> minor;
        for (int r = 1; r < 4; ++r) {
            int cc = 0;
            for (int c = 0; c < 4; ++c) {
                if (c == col) continue;
                minor[r - 1][cc++] = QuadRat::of(B[r][c]);
            }
        }
        QuadRat term = QuadRat::of(B[0][col]) * det3(minor);
        det = (sgn > 0) ? det + term : det - term;
    }
    return det;
}

std::array<std::array<QuadRat, 4>, 4> basis_gram() {
    const auto& B = scheme_constants().basis;
    std::array<std::array<QuadRat, 4>, 4> g;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) {
            QuadRat acc(0, 0, 1);
            for (int j = 0; j < 4; ++j)
                acc = acc + QuadRat::of(B[r][j]) * QuadRat::of(B[c][j]);
            g[r][c] = acc;
        }
    return g;
}

std::optional<LatticeVector> solve_coefficients(const Vec2H& direct, const Vec2H& internal) {
    const auto& B = scheme_constants().basis;
    const std::array<QuadRat, 4> x = {QuadRat::of(direct.x), QuadRat::of(direct.y),
                                      QuadRat::of(internal.x), QuadRat::of(internal.y)};
    const QuadRat half(1, 0, 2);
    LatticeVector out;
    for (int i = 0; i < 4; ++i) {
        // n_i = (column i of B) . x / 2, from B^{-1} = B^T/2.
        QuadRat acc(0, 0, 1);
        for (int r = 0; r < 4; ++r) acc = acc + QuadRat::of(B[r][i]) * x[r];
        acc = acc * half;
        if (!acc.is_integer()) return std::nullopt;
        out.n[i] = acc.a / acc.den;
    }
    // Defensive round trip; cheap and makes misuse loud.
    if (!(direct_image(out) == direct) || !(star_image(out) == internal)) return std::nullopt;
    return out;
}

} // namespace aperimet
