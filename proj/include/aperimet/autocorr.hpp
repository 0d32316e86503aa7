// Autocorrelation of model sets: exact per-point coefficients from the
// window covariogram, finite-patch empirical estimates, and the homometry
// decision.
#ifndef APERIMET_AUTOCORR_HPP
#define APERIMET_AUTOCORR_HPP

#include <unordered_map>
#include <vector>

#include "aperimet/covariogram.hpp"
#include "aperimet/cut_project.hpp"

namespace aperimet {

struct AutocorrCoefficient {
    LatticeVector location;
    QuadRat eta; // exact; use .to_double() for the float view
};

// eta(x) = dens(lattice) * vol(W intersect (W - x*)) = (1/4) * g_W(x*),
// evaluated exactly in Q(sqrt2). eta(0) equals area(W)/4.
QuadRat eta(const Polyomino& window, const LatticeVector& x);

struct EmpiricalAutocorrelation {
    double radius = 0.0;
    std::unordered_map<LatticeVector, double, LatticeVectorHash> weights;

    double weight(const LatticeVector& d) const {
        auto it = weights.find(d);
        return it == weights.end() ? 0.0 : it->second;
    }
};

// weights[d] = #{(x,y) in patch^2 : x - y = d} / (pi r^2).
//
// With max_offset < 0 every pair contributes (quadratic loop; fine for small
// patches). A nonnegative max_offset keeps only differences whose direct
// coordinates satisfy |dx|, |dy| <= max_offset, pruned by an x-sorted sweep;
// weights inside that box are exact, everything outside is dropped.
EmpiricalAutocorrelation empirical_autocorrelation(const ModelSetPatch& p,
                                                   double max_offset = -1.0);

// Differences ordered by weight (descending), ties broken by coefficient
// vector; at most k entries.
std::vector<std::pair<LatticeVector, double>> top_weights(const EmpiricalAutocorrelation& e,
                                                          std::size_t k);

// Two windows give homometric model sets iff their covariograms agree.
bool homometric(const Polyomino& a, const Polyomino& b);

} // namespace aperimet

#endif
