// Batch compute kernels with scalar and AVX2 variants selected at runtime.
//
// Both variants are instantiations of one templated engine, so they execute
// the same floating-point operations in the same order and produce
// bit-identical doubles (the build disables FP contraction globally, and the
// AVX2 variant never uses FMA). Callers may therefore mix backends freely
// without changing results.
#ifndef APERIMET_KERNELS_HPP
#define APERIMET_KERNELS_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

namespace aperimet::kernels {

enum class Backend { scalar, avx2 };

// True if the backend can run on this build/CPU.
bool backend_supported(Backend b);

// Currently selected backend. Default: best supported, unless the
// APERIMET_SIMD environment variable ("scalar" or "avx2") overrides it.
Backend active_backend();

// Test/benchmark override; throws Error if the backend is unsupported.
void set_backend(Backend b);

const char* backend_name(Backend b);

// sin(2*pi*t) and cos(2*pi*t) with exact range reduction in turns.
// Half-integer turns produce exact {0, +-1} values, and the results satisfy
// sin(-t) == -sin(t), cos(-t) == cos(t) bit-for-bit; peak-list inversion
// symmetry rests on these identities.
void sincos2pi(const double* t, double* s, double* c, std::size_t n);

// Single-value versions (always the scalar code path; batch calls agree
// with these bit-for-bit on every lane).
void sincos2pi_one(double t, double& s, double& c);

// sin(pi*t)/(pi*t) with the value 1 at t = 0 (|t| < 1e-8 switches to the
// series 1 - (pi*t)^2/6).
double sinc_pi(double t);

// Lattice row scan. For k = 0..count-1 with n1 = n1lo + k:
//   xd = scale*n1 + a   (direct coordinate; yd fixed along the row)
//   xs = scale*n1 - a   (internal coordinate; ys fixed)
// mask[k] = 1 iff the radius test on (xd, yd) passes (strict < r2 or <= r2)
// and (xs, ys) lies within [bx0,bx1] x [by0,by1].
struct RowScan {
    double scale = 1.0;
    double a = 0.0;
    double yd = 0.0;
    double ys = 0.0;
    double r2 = 0.0;
    double bx0 = 0.0, bx1 = 0.0, by0 = 0.0, by1 = 0.0;
    bool strict_radius = true;
};
void scan_row(const RowScan& p, std::int64_t n1lo, std::size_t count, std::uint8_t* mask);

// Batch diffraction intensity. For each candidate i with internal-space
// coordinates (kx[i], ky[i]):
//   out[i] = scale * (sinc_pi(kx)*sinc_pi(ky))^2 * |sum_j exp(2pi i (kx*ux[j] + ky*uy[j]))|^2
// where (ux, uy) are the per-cell phase multipliers (cell + anchor + 1/2).
void ft_intensity(const double* kx, const double* ky, std::size_t n,
                  const double* ux, const double* uy, std::size_t cells,
                  double scale, double* out);

// Offset data for covariogram evaluation, split into the zero offset and a
// canonical positive half (each entry stands for the pair {d, -d}).
struct CovOffsets {
    double n0 = 0.0;                 // pair count at offset 0
    std::vector<double> dx, dy, cnt; // positive-half offsets and pair counts
};

// Batch covariogram: out[i] = sum over offsets of cnt * tri(vx-dx)*tri(vy-dy)
// with tri(t) = max(0, 1-|t|). Each {d,-d} pair is accumulated as one
// commutative two-term sum, which makes g(v) == g(-v) hold bit-for-bit.
void covariogram_batch(const CovOffsets& d, const double* vx, const double* vy,
                       std::size_t n, double* out);

} // namespace aperimet::kernels

#endif
