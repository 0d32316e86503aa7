// Polyominoes: finite sets of unit cells with a rational anchor. They serve
// both as acceptance windows in internal space and as search objects.
#ifndef APERIMET_POLYOMINO_HPP
#define APERIMET_POLYOMINO_HPP

#include <cstdint>
#include <vector>

#include "aperimet/errors.hpp"
#include "aperimet/rational.hpp"

namespace aperimet {

struct Cell {
    std::int64_t x = 0, y = 0;
    friend bool operator==(const Cell& a, const Cell& b) { return a.x == b.x && a.y == b.y; }
    friend bool operator!=(const Cell& a, const Cell& b) { return !(a == b); }
    friend bool operator<(const Cell& a, const Cell& b) {
        return a.x != b.x ? a.x < b.x : a.y < b.y;
    }
};

struct CellHash {
    std::size_t operator()(const Cell& c) const {
        std::uint64_t h = static_cast<std::uint64_t>(c.x) * 0x9E3779B97F4A7C15ull;
        h ^= static_cast<std::uint64_t>(c.y) + 0xBF58476D1CE4E5B9ull + (h << 6) + (h >> 2);
        h *= 0x94D049BB133111EBull;
        return static_cast<std::size_t>(h ^ (h >> 31));
    }
};

// The 8 square-lattice isometries (identity, reflections, rotations),
// applied cell-wise; index 0 is the identity.
Cell apply_isometry(int which, const Cell& c);
inline constexpr int kIsometryCount = 8;

class Polyomino {
public:
    // Cells are stored sorted; duplicates are rejected. When connectivity is
    // enforced (the default for windows), the cells must be edge-connected.
    // Minkowski factors and other raw point sets pass enforce = false.
    explicit Polyomino(std::vector<Cell> cells,
                       Rational anchor_x = Rational(-1, 2),
                       Rational anchor_y = Rational(-1, 2),
                       bool enforce_connectivity = true);

    const std::vector<Cell>& cells() const { return cells_; }
    std::size_t area() const { return cells_.size(); }
    const Rational& anchor_x() const { return ax_; }
    const Rational& anchor_y() const { return ay_; }
    bool connectivity_enforced() const { return enforce_; }

    bool contains(const Cell& c) const;
    bool is_connected() const;

    std::int64_t min_x() const { return min_x_; }
    std::int64_t max_x() const { return max_x_; }
    std::int64_t min_y() const { return min_y_; }
    std::int64_t max_y() const { return max_y_; }

    Polyomino translated(std::int64_t dx, std::int64_t dy) const;
    // Cell-wise negation; keeps the anchor.
    Polyomino negated() const;
    // Translation-canonical form: lower-left bounding corner at (0,0).
    Polyomino normalized() const;
    Polyomino transformed(int isometry) const;
    Polyomino with_anchor(Rational ax, Rational ay) const;

    friend bool operator==(const Polyomino& a, const Polyomino& b) {
        return a.cells_ == b.cells_ && a.ax_ == b.ax_ && a.ay_ == b.ay_;
    }

private:
    std::vector<Cell> cells_;
    Rational ax_, ay_;
    bool enforce_;
    std::int64_t min_x_, max_x_, min_y_, max_y_;
};

// True if some isometry plus translation carries a onto b (cell sets only;
// anchors are irrelevant for congruence).
bool congruent(const Polyomino& a, const Polyomino& b);

} // namespace aperimet

#endif
