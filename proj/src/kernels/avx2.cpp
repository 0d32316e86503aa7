// AVX2 lane type for the shared kernel engine. Compiled with -mavx2 only
// (never -mfma): the engine's arithmetic must round identically to the
// scalar instantiation, so fused multiply-add is off the table.
#if defined(APERIMET_HAVE_AVX2)

#include <immintrin.h>

#include "engine.hpp"

namespace aperimet::kernels::detail {

namespace {

struct VAvx2 {
    using Mask = __m256d;
    static constexpr std::size_t width = 4;
    __m256d v;

    static VAvx2 load(const double* p) { return {_mm256_loadu_pd(p)}; }
    void store(double* p) const { _mm256_storeu_pd(p, v); }
    static VAvx2 bcast(double x) { return {_mm256_set1_pd(x)}; }
    static VAvx2 iota(std::int64_t base) {
        return {_mm256_set_pd(static_cast<double>(base + 3), static_cast<double>(base + 2),
                              static_cast<double>(base + 1), static_cast<double>(base))};
    }

    friend VAvx2 operator+(VAvx2 a, VAvx2 b) { return {_mm256_add_pd(a.v, b.v)}; }
    friend VAvx2 operator-(VAvx2 a, VAvx2 b) { return {_mm256_sub_pd(a.v, b.v)}; }
    friend VAvx2 operator*(VAvx2 a, VAvx2 b) { return {_mm256_mul_pd(a.v, b.v)}; }
    friend VAvx2 operator/(VAvx2 a, VAvx2 b) { return {_mm256_div_pd(a.v, b.v)}; }

    static VAvx2 round_ne(VAvx2 a) {
        return {_mm256_round_pd(a.v, _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC)};
    }
    static VAvx2 abs(VAvx2 a) {
        return {_mm256_andnot_pd(_mm256_set1_pd(-0.0), a.v)};
    }
    static VAvx2 neg(VAvx2 a) { return {_mm256_xor_pd(a.v, _mm256_set1_pd(-0.0))}; }
    // maxpd semantics: src1 > src2 ? src1 : src2 — same as the scalar lane.
    static VAvx2 max(VAvx2 a, VAvx2 b) { return {_mm256_max_pd(a.v, b.v)}; }

    static Mask lt(VAvx2 a, VAvx2 b) { return _mm256_cmp_pd(a.v, b.v, _CMP_LT_OQ); }
    static Mask le(VAvx2 a, VAvx2 b) { return _mm256_cmp_pd(a.v, b.v, _CMP_LE_OQ); }
    static Mask ge(VAvx2 a, VAvx2 b) { return _mm256_cmp_pd(a.v, b.v, _CMP_GE_OQ); }
    static Mask eq(VAvx2 a, VAvx2 b) { return _mm256_cmp_pd(a.v, b.v, _CMP_EQ_OQ); }
    static Mask m_and(Mask a, Mask b) { return _mm256_and_pd(a, b); }
    static VAvx2 blend(Mask m, VAvx2 t, VAvx2 f) { return {_mm256_blendv_pd(f.v, t.v, m)}; }
    static unsigned mask_bits(Mask m) {
        return static_cast<unsigned>(_mm256_movemask_pd(m));
    }
};

} // namespace

const KernelTable& avx2_table() {
    static const KernelTable t = {
        &Engine<VAvx2>::sincos2pi,
        &Engine<VAvx2>::scan_row,
        &Engine<VAvx2>::ft_intensity,
        &Engine<VAvx2>::covariogram_batch,
    };
    return t;
}

} // namespace aperimet::kernels::detail

#endif // APERIMET_HAVE_AVX2
