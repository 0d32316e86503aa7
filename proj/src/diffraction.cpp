#include "aperimet/diffraction.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <random>
#include <vector>

#include "aperimet/errors.hpp"
#include "aperimet/kernels/kernels.hpp"
#include "aperimet/threading.hpp"

namespace aperimet {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kQuarterSqrt2 = std::numbers::sqrt2 / 4.0;
// |FT|^2 / 16: the square of the point-lattice density 1/4, with the
// window volume already absorbed by the unnormalized transform.
constexpr double kIntensityScale = 1.0 / 16.0;

struct CellPhases {
    std::vector<double> ux, uy;
};

// Per-cell phase multipliers: cell corner + anchor + 1/2 (cell midpoint).
CellPhases cell_phases(const Polyomino& p) {
    CellPhases ph;
    ph.ux.reserve(p.area());
    ph.uy.reserve(p.area());
    const double ax = p.anchor_x().to_double() + 0.5;
    const double ay = p.anchor_y().to_double() + 0.5;
    for (const Cell& c : p.cells()) {
        ph.ux.push_back(static_cast<double>(c.x) + ax);
        ph.uy.push_back(static_cast<double>(c.y) + ay);
    }
    return ph;
}

// sin(pi t)/(pi t) on the libm path, independent of the batch kernels.
double sinc_std(double t) {
    if (std::fabs(t) < 1e-8) {
        const double u = kPi * t;
        return 1.0 - u * u / 6.0;
    }
    const double u = kPi * t;
    return std::sin(u) / u;
}

} // namespace

double intensity(const Polyomino& window, const LatticeVector& n) {
    const CellPhases ph = cell_phases(window);
    const double ad = static_cast<double>(n[1] - n[3]) * kQuarterSqrt2;
    const double bd = static_cast<double>(n[1] + n[3]) * kQuarterSqrt2;
    // Internal coordinates of k* = star_image(n)/2.
    const double kxs = 0.5 * static_cast<double>(n[0]) - ad;
    const double kys = 0.5 * static_cast<double>(n[2]) - bd;
    double out = 0.0;
    kernels::ft_intensity(&kxs, &kys, 1, ph.ux.data(), ph.uy.data(), ph.ux.size(),
                          kIntensityScale, &out);
    return out;
}

double closed_form_f(double kappa, double lambda) {
    const double u_factor = 3.0 + 2.0 * std::cos(2.0 * kPi * lambda) +
                            4.0 * std::cos(kPi * lambda) * std::cos(kPi * (2.0 * kappa + 3.0 * lambda));
    const double v_factor = 5.0 + 6.0 * std::cos(2.0 * kPi * kappa) +
                            2.0 * std::cos(4.0 * kPi * kappa) +
                            4.0 * (2.0 * std::cos(kPi * kappa) + std::cos(3.0 * kPi * kappa)) *
                                std::cos(kPi * (3.0 * kappa + 6.0 * lambda));
    return u_factor * v_factor;
}

double closed_form_intensity(double kappa, double lambda) {
    const double env = sinc_std(kappa) * sinc_std(lambda);
    return closed_form_f(kappa, lambda) * kIntensityScale * env * env;
}

PlacementMatch verify_closed_form(const Polyomino& p) {
    // Fixed-seed sample of evaluation points shared by all placements.
    std::mt19937_64 rng(0x5eed2026ull);
    std::uniform_real_distribution<double> coord(-3.0, 3.0);
    constexpr int kSamples = 1000;
    std::vector<double> xs(kSamples), ys(kSamples);
    for (int i = 0; i < kSamples; ++i) {
        xs[i] = coord(rng);
        ys[i] = coord(rng);
    }

    // The closed form fixes the orientation of the cell set up to the axis
    // reflections (isometries 0..3); translations only change the phase of
    // the transform, never |FT|^2.
    PlacementMatch best;
    best.max_rel_error = std::numeric_limits<double>::infinity();
    for (int iso = 0; iso < 4; ++iso) {
        const Polyomino q = p.transformed(iso);
        double worst = 0.0;
        for (int i = 0; i < kSamples; ++i) {
            const double a =
                std::norm(window_fourier_transform(q, xs[i], ys[i])) * kIntensityScale;
            const double b = closed_form_intensity(xs[i], ys[i]);
            const double rel =
                std::fabs(a - b) / std::max({std::fabs(a), std::fabs(b), 1e-3});
            worst = std::max(worst, rel);
        }
        if (worst < best.max_rel_error) {
            best.isometry = iso;
            best.max_rel_error = worst;
        }
    }
    if (!(best.max_rel_error <= 1e-9)) throw NoPlacementMatches(best.max_rel_error);
    return best;
}

PeakList peak_list(const Polyomino& window, double k_max, double intensity_min,
                   double r_star_factor) {
    if (!(k_max > 0.0)) throw Error("peak list requires k_max > 0");
    if (!(intensity_min > 0.0)) throw Error("peak list requires intensity_min > 0");

    const double area = static_cast<double>(window.area());
    // Internal-space cutoff: past r, |FT(k*)|^2/16 <= area^2/(16 pi^2 r^2)
    // because |sinc| <= 1/(pi|t|) on one axis and <= 1 on the other. The
    // 1.5x slack absorbs the bound's looseness and float fuzz.
    const double r_star = 1.5 * r_star_factor * area / (4.0 * kPi * std::sqrt(intensity_min));

    const CellPhases ph = cell_phases(window);
    const double reach = k_max + r_star;
    // n2, n4 satisfy |n2 -+ n4| * sqrt2/4 <= reach/2 component-wise.
    const auto m2 =
        static_cast<std::int64_t>(std::ceil(std::numbers::sqrt2 * reach)) + 1;
    const double half_reach = 0.5 * reach + 0.25;

    const std::int64_t rows24 = 2 * m2 + 1;
    const int shard_count = std::max(1, thread_count());
    std::vector<std::vector<BraggPeak>> shards(static_cast<std::size_t>(shard_count));

    parallel_chunks(0, rows24, [&](std::int64_t lo, std::int64_t hi, int sh) {
        std::vector<BraggPeak>& out = shards[static_cast<std::size_t>(sh)];
        std::vector<std::uint8_t> mask;
        std::vector<double> cand_kxs, cand_kys, cand_kxd, cand_kyd, cand_i;
        std::vector<LatticeVector> cand_n;
        for (std::int64_t row = lo; row < hi; ++row) {
            const std::int64_t n2 = row - m2;
            for (std::int64_t n4 = -m2; n4 <= m2; ++n4) {
                const double ad = static_cast<double>(n2 - n4) * kQuarterSqrt2;
                const double bd = static_cast<double>(n2 + n4) * kQuarterSqrt2;
                if (std::fabs(ad) > half_reach || std::fabs(bd) > half_reach) continue;

                const auto n3_lo =
                    static_cast<std::int64_t>(std::floor(2.0 * (-k_max - bd))) - 1;
                const auto n3_hi =
                    static_cast<std::int64_t>(std::ceil(2.0 * (k_max - bd))) + 1;
                const auto n1_lo =
                    static_cast<std::int64_t>(std::floor(2.0 * (-k_max - ad))) - 1;
                const auto n1_hi =
                    static_cast<std::int64_t>(std::ceil(2.0 * (k_max - ad))) + 1;
                const auto count = static_cast<std::size_t>(n1_hi - n1_lo + 1);
                mask.resize(count);

                cand_kxs.clear();
                cand_kys.clear();
                cand_kxd.clear();
                cand_kyd.clear();
                cand_n.clear();
                for (std::int64_t n3 = n3_lo; n3 <= n3_hi; ++n3) {
                    const double kyd = 0.5 * static_cast<double>(n3) + bd;
                    const double kys = 0.5 * static_cast<double>(n3) - bd;
                    if (kyd * kyd > k_max * k_max) continue;
                    if (std::fabs(kys) > r_star) continue;

                    kernels::RowScan scan;
                    scan.scale = 0.5;
                    scan.a = ad;
                    scan.yd = kyd;
                    scan.ys = kys;
                    scan.r2 = k_max * k_max;
                    scan.bx0 = -r_star;
                    scan.bx1 = r_star;
                    scan.by0 = -r_star;
                    scan.by1 = r_star;
                    scan.strict_radius = false;
                    kernels::scan_row(scan, n1_lo, count, mask.data());

                    for (std::size_t k = 0; k < count; ++k) {
                        if (!mask[k]) continue;
                        const std::int64_t n1 = n1_lo + static_cast<std::int64_t>(k);
                        cand_kxd.push_back(0.5 * static_cast<double>(n1) + ad);
                        cand_kxs.push_back(0.5 * static_cast<double>(n1) - ad);
                        cand_kyd.push_back(kyd);
                        cand_kys.push_back(kys);
                        cand_n.push_back(LatticeVector{n1, n2, n3, n4});
                    }
                }
                if (cand_n.empty()) continue;

                cand_i.resize(cand_n.size());
                kernels::ft_intensity(cand_kxs.data(), cand_kys.data(), cand_n.size(),
                                      ph.ux.data(), ph.uy.data(), ph.ux.size(),
                                      kIntensityScale, cand_i.data());
                for (std::size_t i = 0; i < cand_n.size(); ++i) {
                    if (cand_i[i] >= intensity_min) {
                        out.push_back(
                            BraggPeak{cand_n[i], cand_kxd[i], cand_kyd[i], cand_i[i]});
                    }
                }
            }
        }
    });

    PeakList list;
    list.k_max = k_max;
    list.intensity_min = intensity_min;
    list.r_star = r_star;
    for (std::vector<BraggPeak>& sh : shards) {
        list.peaks.insert(list.peaks.end(), sh.begin(), sh.end());
    }
    std::sort(list.peaks.begin(), list.peaks.end(),
              [](const BraggPeak& a, const BraggPeak& b) {
                  const double ra = a.kx * a.kx + a.ky * a.ky;
                  const double rb = b.kx * b.kx + b.ky * b.ky;
                  if (ra != rb) return ra < rb;
                  return a.n < b.n;
              });
    return list;
}

} // namespace aperimet
