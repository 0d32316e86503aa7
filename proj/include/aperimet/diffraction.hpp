// Pure point diffraction: Bragg peak intensities over the half module, the
// closed-form intensity of the reference window pair, and bounded peak-list
// enumeration.
#ifndef APERIMET_DIFFRACTION_HPP
#define APERIMET_DIFFRACTION_HPP

#include <vector>

#include "aperimet/covariogram.hpp"
#include "aperimet/lattice.hpp"

namespace aperimet {

struct BraggPeak {
    LatticeVector n;  // k = direct_image(n)/2, exact module coordinates
    double kx, ky;    // float position of k
    double intensity; // nonnegative
};

struct PeakList {
    std::vector<BraggPeak> peaks; // sorted by |k|, then by coefficient vector
    double k_max = 0.0;
    double intensity_min = 0.0;
    double r_star = 0.0; // derived internal-space cutoff used by the scan
};

// I(k) at the module point k = direct_image(n)/2: the squared modulus of the
// window Fourier transform at k* = star_image(n)/2, divided by 16 (the
// squared lattice density; equals dens(model set)^2 normalized by vol^2).
double intensity(const Polyomino& window, const LatticeVector& n);

// The two-factor closed form for the intensity of the reference pair,
// transcribed term by term, and the full intensity with the separable
// sinc^2 envelope (continuously extended on the axes kappa = 0, lambda = 0).
double closed_form_f(double kappa, double lambda);
double closed_form_intensity(double kappa, double lambda);

// Compares |window FT|^2/16 of the polyomino against the closed form on
// 10^3 pseudorandom points of [-3,3]^2, over the four axis-reflection
// placements of the cell set. Returns the best placement; throws
// NoPlacementMatches if none reaches max relative error <= 1e-9.
// Relative error uses |a-b| / max(|a|, |b|, 1e-3); the floor keeps the
// metric meaningful near the zero lines of the sinc envelope.
struct PlacementMatch {
    int isometry = 0;       // index into the polyomino isometry table
    double max_rel_error = 0.0;
};
PlacementMatch verify_closed_form(const Polyomino& p);

// All module points k with |k| <= k_max and I(k) >= intensity_min. The scan
// is bounded in internal space by r_star = slack * A/(4*pi*sqrt(imin))
// (A = cell count): beyond it, |FT|^2/16 <= A^2/(16 pi^2 r^2) < imin, so no
// peak can be missed. r_star_factor widens the scan for soundness checks.
PeakList peak_list(const Polyomino& window, double k_max, double intensity_min,
                   double r_star_factor = 1.0);

} // namespace aperimet

#endif
