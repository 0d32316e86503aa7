#include "aperimet/polyomino.hpp"

#include <algorithm>
#include <unordered_set>

namespace aperimet {

Cell apply_isometry(int which, const Cell& c) {
    switch (which & 7) {
        case 0: return {c.x, c.y};
        case 1: return {-c.x, c.y};
        case 2: return {c.x, -c.y};
        case 3: return {-c.x, -c.y};
        case 4: return {c.y, c.x};
        case 5: return {-c.y, c.x};
        case 6: return {c.y, -c.x};
        default: return {-c.y, -c.x};
    }
}

Polyomino::Polyomino(std::vector<Cell> cells, Rational anchor_x, Rational anchor_y,
                     bool enforce_connectivity)
    : cells_(std::move(cells)), ax_(anchor_x), ay_(anchor_y), enforce_(enforce_connectivity) {
    if (cells_.empty()) throw Error("polyomino has no cells");
    std::sort(cells_.begin(), cells_.end());
    if (std::adjacent_find(cells_.begin(), cells_.end()) != cells_.end())
        throw Error("polyomino has a duplicate cell");
    min_x_ = max_x_ = cells_[0].x;
    min_y_ = max_y_ = cells_[0].y;
    for (const Cell& c : cells_) {
        min_x_ = std::min(min_x_, c.x);
        max_x_ = std::max(max_x_, c.x);
        min_y_ = std::min(min_y_, c.y);
        max_y_ = std::max(max_y_, c.y);
    }
    if (enforce_ && !is_connected()) throw Error("polyomino cells are not edge-connected");
}

bool Polyomino::contains(const Cell& c) const {
    return std::binary_search(cells_.begin(), cells_.end(), c);
}

bool Polyomino::is_connected() const {
    std::unordered_set<Cell, CellHash> todo(cells_.begin() + 1, cells_.end());
    std::vector<Cell> stack{cells_[0]};
    while (!stack.empty()) {
        Cell c = stack.back();
        stack.pop_back();
        for (Cell nb : {Cell{c.x + 1, c.y}, Cell{c.x - 1, c.y}, Cell{c.x, c.y + 1},
                        Cell{c.x, c.y - 1}}) {
            auto it = todo.find(nb);
            if (it != todo.end()) {
                todo.erase(it);
                stack.push_back(nb);
            }
        }
    }
    return todo.empty();
}

Polyomino Polyomino::translated(std::int64_t dx, std::int64_t dy) const {
    std::vector<Cell> out;
    out.reserve(cells_.size());
    for (const Cell& c : cells_) out.push_back({c.x + dx, c.y + dy});
    return Polyomino(std::move(out), ax_, ay_, enforce_);
}

Polyomino Polyomino::negated() const {
    std::vector<Cell> out;
    out.reserve(cells_.size());
    for (const Cell& c : cells_) out.push_back({-c.x, -c.y});
    return Polyomino(std::move(out), ax_, ay_, enforce_);
}

Polyomino Polyomino::normalized() const { return translated(-min_x_, -min_y_); }

Polyomino Polyomino::transformed(int isometry) const {
    std::vector<Cell> out;
    out.reserve(cells_.size());
    for (const Cell& c : cells_) out.push_back(apply_isometry(isometry, c));
    return Polyomino(std::move(out), ax_, ay_, enforce_);
}

Polyomino Polyomino::with_anchor(Rational ax, Rational ay) const {
    return Polyomino(cells_, ax, ay, enforce_);
}

bool congruent(const Polyomino& a, const Polyomino& b) {
    if (a.area() != b.area()) return false;
    const Polyomino na = a.normalized();
    for (int iso = 0; iso < kIsometryCount; ++iso) {
        if (b.transformed(iso).normalized().cells() == na.cells()) return true;
    }
    return false;
}

} // namespace aperimet
