// Frozen regression fixtures shared by the unit and acceptance suites.
//
// The two 15-cell windows below were produced by reconstruct_reference_pair
// and cross-checked by an independent exhaustive search over the factor
// configurations; the 1D pair is the unique output of the exhaustive
// search_1d_pairs(6, 11) scan. They are pinned here so regressions in the
// search/reconstruction code are caught against known-good data.
#ifndef APERIMET_TESTS_FIXTURES_HPP
#define APERIMET_TESTS_FIXTURES_HPP

#include <cstdint>
#include <vector>

#include "aperimet/polyomino.hpp"

namespace aperimet::tests {

inline std::vector<Cell> reference_left_cells() {
    return {{0, 0}, {0, 1}, {1, 0}, {1, 1}, {1, 2}, {1, 3}, {1, 4}, {2, 2},
            {2, 3}, {2, 4}, {2, 5}, {3, 3}, {3, 4}, {3, 5}, {4, 5}};
}

inline std::vector<Cell> reference_right_cells() {
    return {{0, 0}, {1, 0}, {1, 1}, {1, 2}, {1, 3}, {2, 1}, {2, 2}, {2, 3},
            {2, 4}, {2, 5}, {3, 3}, {3, 4}, {3, 5}, {4, 4}, {4, 5}};
}

inline Polyomino reference_left_window() { return Polyomino(reference_left_cells()); }
inline Polyomino reference_right_window() { return Polyomino(reference_right_cells()); }

// The smallest 1D homometric pair found by exhaustive search: 6 points,
// span 11, unique at that size.
inline std::vector<std::int64_t> one_d_pair_a() { return {0, 1, 2, 6, 8, 11}; }
inline std::vector<std::int64_t> one_d_pair_b() { return {0, 1, 6, 7, 9, 11}; }

} // namespace aperimet::tests

#endif
