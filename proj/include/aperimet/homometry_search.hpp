// Homometric pairs: the Minkowski-sum construction, reconstruction of the
// reference 15-cell window pair from its factorized intensity, and
// brute-force searches over small polyominoes and 1D integer sets.
#ifndef APERIMET_HOMOMETRY_SEARCH_HPP
#define APERIMET_HOMOMETRY_SEARCH_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "aperimet/covariogram.hpp"
#include "aperimet/polyomino.hpp"

namespace aperimet {

// A finite set of integer points with no unit-cell semantics: Minkowski
// factors, and 1D sets via y = 0.
class PointConfiguration {
public:
    explicit PointConfiguration(std::vector<Cell> points);

    const std::vector<Cell>& points() const { return pts_; }
    std::size_t size() const { return pts_.size(); }

    PointConfiguration normalized() const; // translated so min corner is (0,0)
    PointConfiguration negated() const;    // point-wise negation

private:
    std::vector<Cell> pts_;
};

// Direct Minkowski sum u + v as a cell set. Throws OverlappingSum if two
// sums coincide (the homometry argument needs the direct-sum property).
// Connectivity is not enforced: factor sums may be disconnected.
Polyomino minkowski_polyomino(const PointConfiguration& u, const PointConfiguration& v);

struct HomometricPairReport {
    Polyomino left, right;
    bool congruent = false; // always false for reported nontrivial pairs
    DiscreteAutocorrelation certificate; // the shared pair-count map
};

// Rebuilds the reference homometric window pair from the two cosine-sum
// factors of its diffraction intensity: searches 3-point and 5-point
// configurations whose difference multisets match the factors, forms the
// two Minkowski products u+v and u+(-v), and verifies the result
// (equal covariograms, non-congruent, connected, 15 cells, closed-form
// agreement for both windows). Throws ReconstructionFailed.
HomometricPairReport reconstruct_reference_pair();

// All non-congruent homometric pairs among connected fixed polyominoes with
// n_cells cells fitting a box_w x box_h bounding box (box values < 1 mean
// unrestricted, i.e. n_cells). Enumerates translation-canonical shapes by
// growth, groups them by exact pair-count map, and reports one
// representative per congruence-class pair. Throws BudgetExceeded when the
// enumeration estimate passes 10^8 shapes.
std::vector<HomometricPairReport> search_polyomino_pairs(int n_cells, int box_w, int box_h);

// Restriction of the pair search to Minkowski-decomposable candidates:
// scans factor configurations u (nu points) and v (nv points) whose direct
// sum fits the box, keeps pairs {u+v, u+(-v)} that are both connected and
// non-congruent, and dedups by congruence of the pair.
std::vector<HomometricPairReport> search_minkowski_pairs(int nu, int nv, int box_w,
                                                         int box_h);

// 1D Patterson search: all pairs of n_points-subsets of {0..max_coord} that
// contain 0 and max_coord (canonical span), have equal difference
// multisets, and are not related by translation or reflection. Throws
// BudgetExceeded when binomial(max_coord+1, n_points) passes 10^8.
std::vector<std::pair<std::vector<std::int64_t>, std::vector<std::int64_t>>>
search_1d_pairs(int n_points, std::int64_t max_coord);

} // namespace aperimet

#endif
