// Model-set patches: enumerate the lattice points whose star image falls
// inside a polyomino window, with exact membership decisions and a floating
// radius cutoff in direct space.
#ifndef APERIMET_CUT_PROJECT_HPP
#define APERIMET_CUT_PROJECT_HPP

#include <vector>

#include "aperimet/lattice.hpp"
#include "aperimet/polyomino.hpp"

namespace aperimet {

enum class Membership { inside, boundary, outside };

// Exact classification of an internal-space point against the window: the
// point is tested against the half-open cells of the window, with grid-line
// coincidences resolved exactly. "boundary" means the point lies on the
// topological boundary of the window region, which a generic placement must
// never produce.
Membership classify_star_point(const Polyomino& window, const Vec2H& star);

struct PatchPoint {
    LatticeVector n;
    QuadHalf x, y; // direct coordinates, exact
};

struct ModelSetPatch {
    std::vector<PatchPoint> points; // sorted by coefficient vector
    double radius = 0.0;
    Polyomino window;
};

// All lattice points with |direct| < radius (float norm) and star image
// strictly inside the window (exact). Throws BoundaryHit if any candidate's
// star image lies exactly on the window boundary. The coefficient box scan
// may be sharded across threads; the result is sorted and deterministic.
ModelSetPatch generate_patch(const Polyomino& window, double radius);

// True iff no lattice vector with |n_i| <= bound has its star image on the
// window boundary (exhaustive exact scan).
bool genericity_check(const Polyomino& window, std::int64_t bound);

// Points of a not in b, compared by coefficient vector. Requires patches of
// equal radius; the corresponding window is the cell-set difference.
std::vector<PatchPoint> patch_difference(const ModelSetPatch& a, const ModelSetPatch& b);

// count / (pi r^2); converges to vol(window)/4 for growing radius.
double density_estimate(const ModelSetPatch& p);

// Smallest pairwise distance in direct space (uniform-discreteness report).
double min_pair_distance(const ModelSetPatch& p);

} // namespace aperimet

#endif
