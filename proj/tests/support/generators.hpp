// Deterministic random generators for property tests.
#ifndef APERIMET_TESTS_GENERATORS_HPP
#define APERIMET_TESTS_GENERATORS_HPP

#include <algorithm>
#include <cstdint>
#include <random>
#include <unordered_set>
#include <vector>

#include "aperimet/homometry_search.hpp"
#include "aperimet/lattice.hpp"
#include "aperimet/polyomino.hpp"

namespace aperimet::tests {

// Connected polyomino grown cell by cell: each step attaches a uniformly
// chosen free edge-neighbor of the current shape. Always connected; the
// distribution is irrelevant for property tests, determinism is not.
inline Polyomino random_polyomino(std::mt19937_64& rng, int n_cells) {
    std::unordered_set<Cell, CellHash> shape{{0, 0}};
    std::vector<Cell> frontier{{0, 1}, {0, -1}, {1, 0}, {-1, 0}};
    while (static_cast<int>(shape.size()) < n_cells) {
        std::uniform_int_distribution<std::size_t> pick(0, frontier.size() - 1);
        const std::size_t i = pick(rng);
        const Cell c = frontier[i];
        frontier[i] = frontier.back();
        frontier.pop_back();
        if (!shape.insert(c).second) continue;
        const Cell nb[4] = {{c.x + 1, c.y}, {c.x - 1, c.y}, {c.x, c.y + 1}, {c.x, c.y - 1}};
        for (const Cell& m : nb)
            if (!shape.count(m)) frontier.push_back(m);
    }
    std::vector<Cell> cells(shape.begin(), shape.end());
    std::sort(cells.begin(), cells.end());
    return Polyomino(std::move(cells)).normalized();
}

// Distinct random points in [0, w) x [0, h); used as Minkowski factors.
inline PointConfiguration random_points(std::mt19937_64& rng, int n, int w, int h) {
    std::uniform_int_distribution<std::int64_t> dx(0, w - 1), dy(0, h - 1);
    std::unordered_set<Cell, CellHash> seen;
    while (static_cast<int>(seen.size()) < n) seen.insert({dx(rng), dy(rng)});
    std::vector<Cell> pts(seen.begin(), seen.end());
    std::sort(pts.begin(), pts.end());
    return PointConfiguration(std::move(pts));
}

inline LatticeVector random_lattice_vector(std::mt19937_64& rng, std::int64_t bound) {
    std::uniform_int_distribution<std::int64_t> d(-bound, bound);
    return {d(rng), d(rng), d(rng), d(rng)};
}

} // namespace aperimet::tests

#endif
