// Exact covariograms of polyominoes: integer autocorrelation counts, exact
// and float evaluation of g(v), difference bodies, window Fourier
// transforms, and sampling grids.
#ifndef APERIMET_COVARIOGRAM_HPP
#define APERIMET_COVARIOGRAM_HPP

#include <complex>
#include <cstdint>
#include <map>
#include <vector>

#include "aperimet/kernels/kernels.hpp"
#include "aperimet/polyomino.hpp"
#include "aperimet/quadratic.hpp"

namespace aperimet {

// Integer pair counts N(d) = #{(c,c') in cells^2 : c' - c = d}; the exact
// finite representation of the covariogram. Anchor-independent.
class DiscreteAutocorrelation {
public:
    static DiscreteAutocorrelation of(const Polyomino& p);
    static DiscreteAutocorrelation of_points(const std::vector<Cell>& pts);

    std::int64_t at(const Cell& d) const {
        auto it = counts_.find(d);
        return it == counts_.end() ? 0 : it->second;
    }
    const std::map<Cell, std::int64_t>& counts() const { return counts_; }

    friend bool operator==(const DiscreteAutocorrelation& a, const DiscreteAutocorrelation& b) {
        return a.counts_ == b.counts_;
    }
    friend bool operator!=(const DiscreteAutocorrelation& a, const DiscreteAutocorrelation& b) {
        return !(a == b);
    }

    // Exact content hash of the sorted count map, for grouping shapes.
    std::uint64_t fingerprint() const;

private:
    std::map<Cell, std::int64_t> counts_;
};

// g(v) = sum_d N(d) * tri(vx-dx) * tri(vy-dy), tri(t) = max(0, 1-|t|);
// evaluated exactly in the given field (Rational for rational v, QuadRat
// when v carries sqrt2 coordinates, e.g. star images).
Rational covariogram_eval(const DiscreteAutocorrelation& n, const Rational& vx,
                          const Rational& vy);
QuadRat covariogram_eval(const DiscreteAutocorrelation& n, const QuadRat& vx,
                         const QuadRat& vy);
Rational covariogram_eval(const Polyomino& p, const Rational& vx, const Rational& vy);
QuadRat covariogram_eval(const Polyomino& p, const QuadRat& vx, const QuadRat& vy);

// Float view of the same formula (plotting and batch grids only).
double covariogram_eval(const Polyomino& p, double vx, double vy);

// Split of the count map into offset 0 plus a canonical positive half, the
// input layout of the batch covariogram kernel.
kernels::CovOffsets covariogram_offsets(const DiscreteAutocorrelation& n);

// True iff the two polyominoes have identical count maps; equivalent to
// equality of the full covariograms.
bool covariogram_equal(const Polyomino& a, const Polyomino& b);

// supp g = P - P: the offsets with N(d) > 0, thickened by the open square
// (-1,1)^2. The closure is a union of unit cells; its boundary is returned
// as closed grid-vertex loops (outer boundary and any holes).
struct DifferenceBody {
    std::vector<Cell> offsets;
    std::vector<Cell> support_cells;
    std::vector<std::vector<Cell>> boundary_loops;
};
DifferenceBody difference_body(const Polyomino& p);

// 1_P^(k) = sinc(kx) sinc(ky) * sum_cells exp(2 pi i (kx ux + ky uy)) with
// u = cell + anchor + (1/2, 1/2); value area(P) at k = 0.
std::complex<double> window_fourier_transform(const Polyomino& p, double kx, double ky);

// Fourier transform of g along an independent path: the cosine sum
// sinc^2(kx) sinc^2(ky) * sum_d N(d) cos(2 pi k.d). Must equal
// |window_fourier_transform|^2; the comparison is a library self-test.
double cosine_sum_transform(const Polyomino& p, double kx, double ky);

// Covariogram samples on the symmetric bounding box of the difference body
// at the given step, computed with the batch kernel. Values satisfy
// g(v) == g(-v) bit-for-bit.
struct CovariogramGrid {
    double x0 = 0, y0 = 0;
    double step = 0;
    std::size_t nx = 0, ny = 0;
    std::vector<double> values; // row-major, y varying slowest
    double at(std::size_t ix, std::size_t iy) const { return values[iy * nx + ix]; }
};
CovariogramGrid covariogram_grid(const Polyomino& p, const Rational& step);

} // namespace aperimet

#endif
