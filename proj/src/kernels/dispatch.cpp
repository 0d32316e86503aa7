#include <atomic>
#include <cstdlib>
#include <cstring>

#include "aperimet/errors.hpp"
#include "engine.hpp"

namespace aperimet::kernels {

namespace {

bool cpu_has_avx2() {
#if defined(APERIMET_HAVE_AVX2)
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

Backend resolve_default() {
    if (const char* env = std::getenv("APERIMET_SIMD")) {
        if (std::strcmp(env, "scalar") == 0) return Backend::scalar;
        if (std::strcmp(env, "avx2") == 0 && cpu_has_avx2()) return Backend::avx2;
    }
    return cpu_has_avx2() ? Backend::avx2 : Backend::scalar;
}

std::atomic<Backend>& backend_slot() {
    static std::atomic<Backend> b{resolve_default()};
    return b;
}

const detail::KernelTable& table() {
#if defined(APERIMET_HAVE_AVX2)
    if (backend_slot().load(std::memory_order_relaxed) == Backend::avx2)
        return detail::avx2_table();
#endif
    return detail::scalar_table();
}

} // namespace

bool backend_supported(Backend b) {
    return b == Backend::scalar || (b == Backend::avx2 && cpu_has_avx2());
}

Backend active_backend() { return backend_slot().load(std::memory_order_relaxed); }

void set_backend(Backend b) {
    if (!backend_supported(b)) throw Error("kernel backend not supported on this CPU");
    backend_slot().store(b, std::memory_order_relaxed);
}

const char* backend_name(Backend b) {
    return b == Backend::avx2 ? "avx2" : "scalar";
}

void sincos2pi(const double* t, double* s, double* c, std::size_t n) {
    table().sincos2pi(t, s, c, n);
}

void sincos2pi_one(double t, double& s, double& c) {
    detail::scalar_table().sincos2pi(&t, &s, &c, 1);
}

double sinc_pi(double t) {
    // Mirrors the engine's sinc_v exactly (same branch, same operations).
    double s, c;
    sincos2pi_one(t * 0.5, s, c);
    const double pt = t * std::numbers::pi;
    const double big = s / pt;
    const double small = 1.0 - (pt * pt) / 6.0;
    return (t < 0 ? -t : t) < 1e-8 ? small : big;
}

void scan_row(const RowScan& p, std::int64_t n1lo, std::size_t count, std::uint8_t* mask) {
    table().scan_row(p, n1lo, count, mask);
}

void ft_intensity(const double* kx, const double* ky, std::size_t n,
                  const double* ux, const double* uy, std::size_t cells,
                  double scale, double* out) {
    table().ft_intensity(kx, ky, n, ux, uy, cells, scale, out);
}

void covariogram_batch(const CovOffsets& d, const double* vx, const double* vy,
                       std::size_t n, double* out) {
    table().covariogram_batch(d, vx, vy, n, out);
}

} // namespace aperimet::kernels
