#include <cmath>

#include "engine.hpp"

namespace aperimet::kernels::detail {

namespace {

struct VScalar {
    using Mask = bool;
    static constexpr std::size_t width = 1;
    double v;

    static VScalar load(const double* p) { return {*p}; }
    void store(double* p) const { *p = v; }
    static VScalar bcast(double x) { return {x}; }
    static VScalar iota(std::int64_t base) { return {static_cast<double>(base)}; }

    friend VScalar operator+(VScalar a, VScalar b) { return {a.v + b.v}; }
    friend VScalar operator-(VScalar a, VScalar b) { return {a.v - b.v}; }
    friend VScalar operator*(VScalar a, VScalar b) { return {a.v * b.v}; }
    friend VScalar operator/(VScalar a, VScalar b) { return {a.v / b.v}; }

    static VScalar round_ne(VScalar a) { return {std::nearbyint(a.v)}; }
    static VScalar abs(VScalar a) { return {std::fabs(a.v)}; }
    static VScalar neg(VScalar a) { return {-a.v}; }
    static VScalar max(VScalar a, VScalar b) { return {a.v > b.v ? a.v : b.v}; }

    static Mask lt(VScalar a, VScalar b) { return a.v < b.v; }
    static Mask le(VScalar a, VScalar b) { return a.v <= b.v; }
    static Mask ge(VScalar a, VScalar b) { return a.v >= b.v; }
    static Mask eq(VScalar a, VScalar b) { return a.v == b.v; }
    static Mask m_and(Mask a, Mask b) { return a && b; }
    static VScalar blend(Mask m, VScalar t, VScalar f) { return m ? t : f; }
    static unsigned mask_bits(Mask m) { return m ? 1u : 0u; }
};

} // namespace

const KernelTable& scalar_table() {
    static const KernelTable t = {
        &Engine<VScalar>::sincos2pi,
        &Engine<VScalar>::scan_row,
        &Engine<VScalar>::ft_intensity,
        &Engine<VScalar>::covariogram_batch,
    };
    return t;
}

} // namespace aperimet::kernels::detail
