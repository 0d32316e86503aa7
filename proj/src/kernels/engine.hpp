// Shared kernel engine, instantiated once per lane type. Keeping a single
// source of truth for the arithmetic is what guarantees scalar/AVX2
// bit-equality: both instantiations run the same operations in the same
// order, differing only in lane width.
#ifndef APERIMET_KERNELS_ENGINE_HPP
#define APERIMET_KERNELS_ENGINE_HPP

#include <cstddef>
#include <cstdint>
#include <numbers>

#include "aperimet/kernels/kernels.hpp"

namespace aperimet::kernels::detail {

// Taylor coefficients of sin(2*pi*z) = z * sum s[k] z^(2k) and
// cos(2*pi*z) = sum c[k] z^(2k), correctly rounded coefficients
// (+-(2*pi)^(2k+1)/(2k+1)! and +-(2*pi)^(2k)/(2k)!). With |z| <= 1/8 the
// truncation error is below 8.3e-20 (sin) and 3.3e-21 (cos).
inline constexpr double kSinCoeff[9] = {
    0x1.921fb54442d18p+2,  -0x1.4abbce625be53p+5, 0x1.466bc6775aae2p+6,
    -0x1.32d2cce62bd86p+6, 0x1.50783487ee782p+5,  -0x1.e3074fde8871fp+3,
    0x1.e8f434d018d63p+1,  -0x1.6fadb9f155744p-1, 0x1.aaec32af93359p-4,
};
inline constexpr double kCosCoeff[10] = {
    0x1p+0,                -0x1.3bd3cc9be45dep+4, 0x1.03c1f081b5ac4p+6,
    -0x1.55d3c7e3cbffap+6, 0x1.e1f506891babbp+5,  -0x1.a6d1f2a204a8cp+4,
    0x1.f9d38a3763cc3p+2,  -0x1.b6e24f44b128fp+0, 0x1.20c62c2f2d7f5p-2,
    -0x1.2a0c591af8314p-5,
};

template <class V>
struct Engine {
    using M = typename V::Mask;

    // Range reduction in turns: u = t - round(t) in [-1/2,1/2], then
    // quarter-turn split w = 4u, q = round(w) in {-2..2}, z = (w-q)/4 in
    // [-1/8,1/8]. Quadrant recombination by angle addition:
    //   q = 0: ( s,  c)    q = +1: ( c, -s)
    //   q =+-2: (-s, -c)   q = -1: (-c,  s)
    // round-to-nearest-even on both reductions keeps the map odd in t, so
    // sin stays odd and cos even bit-for-bit.
    static void sincos_v(V t, V& outS, V& outC) {
        const V u = t - V::round_ne(t);
        const V w = u * V::bcast(4.0);
        const V q = V::round_ne(w);
        const V z = (w - q) * V::bcast(0.25);
        const V z2 = z * z;

        V ps = V::bcast(kSinCoeff[8]);
        for (int i = 7; i >= 0; --i) ps = ps * z2 + V::bcast(kSinCoeff[i]);
        ps = z * ps;
        V pc = V::bcast(kCosCoeff[9]);
        for (int i = 8; i >= 0; --i) pc = pc * z2 + V::bcast(kCosCoeff[i]);

        const M is0 = V::eq(q, V::bcast(0.0));
        const M is1 = V::eq(q, V::bcast(1.0));
        const M is3 = V::eq(q, V::bcast(-1.0)); // remaining lanes have |q| = 2
        const V ns = V::neg(ps), nc = V::neg(pc);
        outS = V::blend(is0, ps, V::blend(is1, pc, V::blend(is3, nc, ns)));
        outC = V::blend(is0, pc, V::blend(is1, ns, V::blend(is3, ps, nc)));
    }

    static V sinc_v(V t) {
        V s, c;
        sincos_v(t * V::bcast(0.5), s, c);
        const V pt = t * V::bcast(std::numbers::pi);
        const V big = s / pt;
        const V small = V::bcast(1.0) - (pt * pt) / V::bcast(6.0);
        return V::blend(V::lt(V::abs(t), V::bcast(1e-8)), small, big);
    }

    static V tri_v(V t) {
        // max(0, 1-|t|) with the same select semantics as "a > b ? a : b".
        return V::max(V::bcast(1.0) - V::abs(t), V::bcast(0.0));
    }

    static void sincos2pi(const double* t, double* s, double* c, std::size_t n) {
        std::size_t i = 0;
        for (; i + V::width <= n; i += V::width) {
            V vs, vc;
            sincos_v(V::load(t + i), vs, vc);
            vs.store(s + i);
            vc.store(c + i);
        }
        if (i < n) {
            double bt[V::width] = {0}, bs[V::width], bc[V::width];
            for (std::size_t k = i; k < n; ++k) bt[k - i] = t[k];
            V vs, vc;
            sincos_v(V::load(bt), vs, vc);
            vs.store(bs);
            vc.store(bc);
            for (std::size_t k = i; k < n; ++k) s[k] = bs[k - i], c[k] = bc[k - i];
        }
    }

    static void scan_row(const RowScan& p, std::int64_t n1lo, std::size_t count,
                         std::uint8_t* mask) {
        const V scale = V::bcast(p.scale), a = V::bcast(p.a);
        const V yd = V::bcast(p.yd), ys = V::bcast(p.ys);
        const V r2 = V::bcast(p.r2);
        const V bx0 = V::bcast(p.bx0), bx1 = V::bcast(p.bx1);
        const V by0 = V::bcast(p.by0), by1 = V::bcast(p.by1);
        const V yy = yd * yd;
        const M ys_ok = V::m_and(V::ge(ys, by0), V::le(ys, by1));
        for (std::size_t i = 0; i < count; i += V::width) {
            const V n1 = V::iota(n1lo + static_cast<std::int64_t>(i));
            const V sn1 = scale * n1;
            const V xd = sn1 + a;
            const V xs = sn1 - a;
            const V rr = xd * xd + yy;
            const M rok = p.strict_radius ? V::lt(rr, r2) : V::le(rr, r2);
            const M xok = V::m_and(V::ge(xs, bx0), V::le(xs, bx1));
            const unsigned bits = V::mask_bits(V::m_and(rok, V::m_and(xok, ys_ok)));
            const std::size_t lanes = count - i < V::width ? count - i : V::width;
            for (std::size_t k = 0; k < lanes; ++k)
                mask[i + k] = static_cast<std::uint8_t>((bits >> k) & 1u);
        }
    }

    static void ft_intensity(const double* kx, const double* ky, std::size_t n,
                             const double* ux, const double* uy, std::size_t cells,
                             double scale, double* out) {
        const V vscale = V::bcast(scale);
        std::size_t i = 0;
        auto block = [&](V vx, V vy) -> V {
            const V sx = sinc_v(vx);
            const V sy = sinc_v(vy);
            V re = V::bcast(0.0), im = V::bcast(0.0);
            for (std::size_t j = 0; j < cells; ++j) {
                const V t = vx * V::bcast(ux[j]) + vy * V::bcast(uy[j]);
                V s, c;
                sincos_v(t, s, c);
                re = re + c;
                im = im + s;
            }
            const V p = sx * sy;
            const V amp = re * re + im * im;
            return ((p * p) * amp) * vscale;
        };
        for (; i + V::width <= n; i += V::width) {
            block(V::load(kx + i), V::load(ky + i)).store(out + i);
        }
        if (i < n) {
            double bx[V::width] = {0}, by[V::width] = {0}, bo[V::width];
            for (std::size_t k = i; k < n; ++k) bx[k - i] = kx[k], by[k - i] = ky[k];
            block(V::load(bx), V::load(by)).store(bo);
            for (std::size_t k = i; k < n; ++k) out[k] = bo[k - i];
        }
    }

    static void covariogram_batch(const CovOffsets& d, const double* vx, const double* vy,
                                  std::size_t n, double* out) {
        const std::size_t m = d.dx.size();
        auto block = [&](V x, V y) -> V {
            V g = V::bcast(d.n0) * (tri_v(x) * tri_v(y));
            for (std::size_t j = 0; j < m; ++j) {
                const V ox = V::bcast(d.dx[j]), oy = V::bcast(d.dy[j]);
                // One commutative pair sum per {d,-d}: negating (x,y) swaps
                // t1 and t2, so the accumulated value is bit-identical.
                const V t1 = tri_v(x - ox) * tri_v(y - oy);
                const V t2 = tri_v(x + ox) * tri_v(y + oy);
                g = g + V::bcast(d.cnt[j]) * (t1 + t2);
            }
            return g;
        };
        std::size_t i = 0;
        for (; i + V::width <= n; i += V::width)
            block(V::load(vx + i), V::load(vy + i)).store(out + i);
        if (i < n) {
            double bx[V::width] = {0}, by[V::width] = {0}, bo[V::width];
            for (std::size_t k = i; k < n; ++k) bx[k - i] = vx[k], by[k - i] = vy[k];
            block(V::load(bx), V::load(by)).store(bo);
            for (std::size_t k = i; k < n; ++k) out[k] = bo[k - i];
        }
    }
};

// Dispatch table filled in by the per-backend translation units.
struct KernelTable {
    void (*sincos2pi)(const double*, double*, double*, std::size_t);
    void (*scan_row)(const RowScan&, std::int64_t, std::size_t, std::uint8_t*);
    void (*ft_intensity)(const double*, const double*, std::size_t, const double*,
                         const double*, std::size_t, double, double*);
    void (*covariogram_batch)(const CovOffsets&, const double*, const double*, std::size_t,
                              double*);
};

const KernelTable& scalar_table();
#if defined(APERIMET_HAVE_AVX2)
const KernelTable& avx2_table();
#endif

} // namespace aperimet::kernels::detail

#endif
