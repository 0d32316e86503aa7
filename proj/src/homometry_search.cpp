#include "aperimet/homometry_search.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <map>
#include <numeric>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "aperimet/diffraction.hpp"
#include "aperimet/errors.hpp"

namespace aperimet {

namespace {

constexpr std::int64_t kEnumerationBudget = 100'000'000;

// Counts of fixed (translation-canonical) polyominoes by cell count,
// OEIS A001168; index 0 unused.
constexpr std::int64_t kFixedPolyominoCount[16] = {
    0,    1,     2,      6,      19,      63,      216,      760,
    2725, 9910, 36446, 135268, 505861, 1903890, 7204874, 27394666};

// The 3-point factor: its intensity contribution is
//   3 + 2cos(2pi lambda) + 4cos(pi lambda)cos(pi(2kappa + 3lambda)),
// and 2cos(a)cos(b) = cos(b-a) + cos(b+a) turns the product term into
// cos(2pi(kappa+lambda)) + cos(2pi(kappa+2lambda)). With k = (kappa,lambda)
// the factor is the cosine sum sum_d N(d) cos(2pi k.d) over:
const std::map<Cell, std::int64_t> kUFactorDiffs = {
    {{0, 0}, 3},  {{0, 1}, 1},  {{0, -1}, 1},  {{1, 1}, 1},
    {{-1, -1}, 1}, {{1, 2}, 1}, {{-1, -2}, 1}};

// The 5-point factor:
//   5 + 6cos(2pi kappa) + 2cos(4pi kappa)
//     + 4(2cos(pi kappa) + cos(3pi kappa)) cos(pi(3kappa + 6lambda)).
// Expanding the product terms:
//   8cos(pi kappa)cos(pi(3kappa+6lambda))  = 4cos(2pi(kappa+3lambda)) + 4cos(2pi(2kappa+3lambda))
//   4cos(3pi kappa)cos(pi(3kappa+6lambda)) = 2cos(2pi(3lambda))       + 2cos(2pi(3kappa+3lambda))
const std::map<Cell, std::int64_t> kVFactorDiffs = {
    {{0, 0}, 5},  {{1, 0}, 3},  {{-1, 0}, 3},  {{2, 0}, 1},  {{-2, 0}, 1},
    {{1, 3}, 2},  {{-1, -3}, 2}, {{2, 3}, 2},  {{-2, -3}, 2}, {{0, 3}, 1},
    {{0, -3}, 1}, {{3, 3}, 1},  {{-3, -3}, 1}};

std::vector<Cell> normalized_cells(std::vector<Cell> cells) {
    std::sort(cells.begin(), cells.end());
    std::int64_t mx = cells.front().x, my = cells.front().y;
    for (const Cell& c : cells) {
        mx = std::min(mx, c.x);
        my = std::min(my, c.y);
    }
    for (Cell& c : cells) {
        c.x -= mx;
        c.y -= my;
    }
    return cells;
}

// Serialization key for small nonnegative cells (coordinates < 127).
std::string cell_key(const std::vector<Cell>& cells) {
    std::string s;
    s.reserve(2 * cells.size());
    for (const Cell& c : cells) {
        s.push_back(static_cast<char>(c.x));
        s.push_back(static_cast<char>(c.y));
    }
    return s;
}

// Pair identity up to a joint isometry plus per-shape translation; used to
// report exactly one representative of each congruence class of pairs.
std::string canonical_pair_key(const std::vector<Cell>& a, const std::vector<Cell>& b) {
    std::string best;
    std::vector<Cell> ta, tb;
    for (int iso = 0; iso < kIsometryCount; ++iso) {
        ta.clear();
        tb.clear();
        for (const Cell& c : a) ta.push_back(apply_isometry(iso, c));
        for (const Cell& c : b) tb.push_back(apply_isometry(iso, c));
        std::string ka = cell_key(normalized_cells(ta));
        std::string kb = cell_key(normalized_cells(tb));
        if (kb < ka) std::swap(ka, kb);
        std::string key = ka + '|' + kb;
        if (best.empty() || key < best) best = key;
    }
    return best;
}

// binomial(n, k) clamped at cap + 1 (exact while below the cap).
std::int64_t binomial_capped(std::int64_t n, std::int64_t k, std::int64_t cap) {
    if (k < 0 || n < 0 || k > n) return 0;
    k = std::min(k, n - k);
    unsigned __int128 r = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        r = r * static_cast<unsigned __int128>(n - k + i) / static_cast<unsigned __int128>(i);
        if (r > static_cast<unsigned __int128>(cap)) return cap + 1;
    }
    return static_cast<std::int64_t>(r);
}

// Calls fn(indices) for every k-subset of {0..m-1} in lexicographic order.
template <typename Fn>
void for_each_combination(int m, int k, Fn&& fn) {
    if (k <= 0 || k > m) return;
    std::vector<int> idx(static_cast<std::size_t>(k));
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        fn(idx);
        int i = k - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == m - k + i) --i;
        if (i < 0) break;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
}

std::size_t overlap_count(const std::vector<Cell>& a, const std::vector<Cell>& b) {
    std::size_t i = 0, j = 0, n = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) {
            ++n;
            ++i;
            ++j;
        } else if (a[i] < b[j]) {
            ++i;
        } else {
            ++j;
        }
    }
    return n;
}

// All translation-canonical point sets of the given size whose difference
// multiset equals the target. Candidates are confined to the bounding box
// the target implies. Also reports the best partial match for diagnostics.
struct FactorSearch {
    std::vector<std::vector<Cell>> matches;
    std::size_t best_partial = 0;
};

FactorSearch search_factor(int count, const std::map<Cell, std::int64_t>& target) {
    std::int64_t w = 0, h = 0;
    for (const auto& [d, c] : target) {
        w = std::max<std::int64_t>(w, std::llabs(d.x));
        h = std::max<std::int64_t>(h, std::llabs(d.y));
    }
    const int bw = static_cast<int>(w) + 1;
    const int bh = static_cast<int>(h) + 1;
    FactorSearch out;
    std::vector<Cell> cells(static_cast<std::size_t>(count));
    for_each_combination(bw * bh, count, [&](const std::vector<int>& idx) {
        bool touch_x = false, touch_y = false;
        for (std::size_t i = 0; i < idx.size(); ++i) {
            cells[i] = Cell{idx[i] % bw, idx[i] / bw};
            touch_x = touch_x || cells[i].x == 0;
            touch_y = touch_y || cells[i].y == 0;
        }
        if (!touch_x || !touch_y) return; // not translation-canonical
        const DiscreteAutocorrelation da = DiscreteAutocorrelation::of_points(cells);
        if (da.counts() == target) {
            out.matches.push_back(cells);
            return;
        }
        std::size_t partial = 0;
        for (const auto& [d, c] : target)
            if (da.at(d) == c) ++partial;
        out.best_partial = std::max(out.best_partial, partial);
    });
    std::sort(out.matches.begin(), out.matches.end());
    return out;
}

Polyomino as_window(const std::vector<Cell>& cells) {
    return Polyomino(cells, Rational(-1, 2), Rational(-1, 2), true);
}

// Flood-fill connectivity on an 8x8 bitboard (bit index = x + 8*y).
bool connected64(std::uint64_t bits) {
    if (bits == 0) return false;
    constexpr std::uint64_t file_a = 0x0101010101010101ull;
    constexpr std::uint64_t file_h = 0x8080808080808080ull;
    std::uint64_t seen = bits & (~bits + 1);
    while (true) {
        const std::uint64_t grow =
            (seen | ((seen << 1) & ~file_a) | ((seen >> 1) & ~file_h) | (seen << 8) |
             (seen >> 8)) &
            bits;
        if (grow == seen) return seen == bits;
        seen = grow;
    }
}

std::uint64_t board_bits(const std::vector<Cell>& cells) {
    std::uint64_t b = 0;
    for (const Cell& c : cells) b |= 1ull << (c.x + 8 * c.y);
    return b;
}

} // namespace

PointConfiguration::PointConfiguration(std::vector<Cell> points) : pts_(std::move(points)) {
    if (pts_.empty()) throw Error("point configuration has no points");
    std::sort(pts_.begin(), pts_.end());
    if (std::adjacent_find(pts_.begin(), pts_.end()) != pts_.end())
        throw Error("point configuration has a duplicate point");
}

PointConfiguration PointConfiguration::normalized() const {
    return PointConfiguration(normalized_cells(pts_));
}

PointConfiguration PointConfiguration::negated() const {
    std::vector<Cell> out;
    out.reserve(pts_.size());
    for (const Cell& c : pts_) out.push_back(Cell{-c.x, -c.y});
    return PointConfiguration(std::move(out));
}

Polyomino minkowski_polyomino(const PointConfiguration& u, const PointConfiguration& v) {
    std::vector<Cell> sums;
    sums.reserve(u.size() * v.size());
    for (const Cell& a : u.points())
        for (const Cell& b : v.points()) sums.push_back(Cell{a.x + b.x, a.y + b.y});
    std::sort(sums.begin(), sums.end());
    const auto dup = std::adjacent_find(sums.begin(), sums.end());
    if (dup != sums.end())
        throw OverlappingSum(static_cast<int>(dup->x), static_cast<int>(dup->y));
    return Polyomino(std::move(sums), Rational(-1, 2), Rational(-1, 2), false);
}

HomometricPairReport reconstruct_reference_pair() {
    const FactorSearch fu = search_factor(3, kUFactorDiffs);
    const FactorSearch fv = search_factor(5, kVFactorDiffs);
    if (fu.matches.empty() || fv.matches.empty()) {
        const auto& bad = fu.matches.empty() ? fu : fv;
        const auto& name = fu.matches.empty() ? "3-point" : "5-point";
        throw ReconstructionFailed(
            std::string("no ") + name +
            " configuration matches its difference data (best partial match: " +
            std::to_string(bad.best_partial) + " entries)");
    }
    // Deterministic choice: the lexicographically smallest match of each
    // factor (matches come in inversion-related pairs; any choice yields the
    // same two product shapes up to inversion).
    const PointConfiguration u{fu.matches.front()};
    const PointConfiguration v{fv.matches.front()};

    const std::vector<Cell> left_cells =
        normalized_cells(minkowski_polyomino(u, v).cells());
    const std::vector<Cell> right_raw =
        normalized_cells(minkowski_polyomino(u, v.negated()).cells());
    // The two translation classes of u+(-v) differ by point inversion; pick
    // the representative sharing the most cells with the left window so the
    // pair is reported in aligned position (13 shared cells, 2 apart).
    std::vector<Cell> right_inv;
    right_inv.reserve(right_raw.size());
    for (const Cell& c : right_raw) right_inv.push_back(Cell{-c.x, -c.y});
    right_inv = normalized_cells(right_inv);
    const std::vector<Cell>& right_cells =
        overlap_count(left_cells, right_inv) > overlap_count(left_cells, right_raw)
            ? right_inv
            : right_raw;

    const Polyomino left = as_window(left_cells);
    const Polyomino right = as_window(right_cells);
    if (left.area() != 15 || right.area() != 15)
        throw ReconstructionFailed("product windows do not have 15 cells");
    if (!covariogram_equal(left, right))
        throw ReconstructionFailed("product windows are not homometric");
    if (congruent(left, right))
        throw ReconstructionFailed("product windows are congruent");
    try {
        verify_closed_form(left);
        verify_closed_form(right);
    } catch (const NoPlacementMatches& e) {
        throw ReconstructionFailed(
            "product windows do not reproduce the closed-form intensity (best max "
            "relative error " +
            std::to_string(e.best_error) + ")");
    }
    return HomometricPairReport{left, right, false, DiscreteAutocorrelation::of(left)};
}

std::vector<HomometricPairReport> search_polyomino_pairs(int n_cells, int box_w, int box_h) {
    if (n_cells < 1) throw Error("cell count must be at least 1");
    if (box_w < 1 || box_w > n_cells) box_w = n_cells;
    if (box_h < 1 || box_h > n_cells) box_h = n_cells;

    std::int64_t estimate = n_cells <= 15 ? kFixedPolyominoCount[n_cells]
                                          : std::numeric_limits<std::int64_t>::max();
    estimate = std::min(estimate,
                        binomial_capped(static_cast<std::int64_t>(box_w) * box_h, n_cells,
                                        kEnumerationBudget));
    if (estimate > kEnumerationBudget)
        throw BudgetExceeded("fixed-polyomino enumeration estimate exceeds 10^8 shapes");

    // Growth enumeration of translation-canonical connected shapes, pruned
    // to the bounding box at every size (a shape fitting the box always has
    // a one-cell-smaller connected subshape that fits it too).
    std::vector<std::vector<Cell>> shapes = {{Cell{0, 0}}};
    for (int size = 2; size <= n_cells; ++size) {
        std::vector<std::vector<Cell>> next;
        std::unordered_set<std::string> seen;
        for (const std::vector<Cell>& shape : shapes) {
            for (const Cell& c : shape) {
                const Cell nbs[4] = {{c.x + 1, c.y}, {c.x - 1, c.y}, {c.x, c.y + 1},
                                     {c.x, c.y - 1}};
                for (const Cell& nb : nbs) {
                    if (std::binary_search(shape.begin(), shape.end(), nb)) continue;
                    std::vector<Cell> grown = shape;
                    grown.insert(std::upper_bound(grown.begin(), grown.end(), nb), nb);
                    grown = normalized_cells(std::move(grown));
                    if (grown.back().x >= box_w) continue; // sorted: back has max x
                    std::int64_t max_y = 0;
                    for (const Cell& g : grown) max_y = std::max(max_y, g.y);
                    if (max_y >= box_h) continue;
                    std::string key = cell_key(grown);
                    if (seen.insert(std::move(key)).second) next.push_back(std::move(grown));
                }
            }
        }
        shapes = std::move(next);
    }

    // Group by exact pair-count map (fingerprint first, exact map second).
    std::vector<DiscreteAutocorrelation> maps;
    maps.reserve(shapes.size());
    for (const std::vector<Cell>& s : shapes) maps.push_back(DiscreteAutocorrelation::of_points(s));
    std::unordered_map<std::uint64_t, std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < shapes.size(); ++i) groups[maps[i].fingerprint()].push_back(i);

    std::vector<std::pair<std::string, HomometricPairReport>> found;
    std::unordered_set<std::string> reported;
    for (const auto& [fp, members] : groups) {
        if (members.size() < 2) continue;
        for (std::size_t a = 0; a < members.size(); ++a) {
            for (std::size_t b = a + 1; b < members.size(); ++b) {
                const std::size_t i = members[a], j = members[b];
                if (!(maps[i] == maps[j])) continue;
                const Polyomino pi = as_window(shapes[i]);
                const Polyomino pj = as_window(shapes[j]);
                if (congruent(pi, pj)) continue;
                std::string key = canonical_pair_key(shapes[i], shapes[j]);
                if (!reported.insert(key).second) continue; // keeps a copy for dedupe
                const bool ij = shapes[i] < shapes[j];
                found.emplace_back(std::move(key),
                                   HomometricPairReport{ij ? pi : pj, ij ? pj : pi, false,
                                                        maps[i]});
            }
        }
    }
    std::sort(found.begin(), found.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<HomometricPairReport> out;
    out.reserve(found.size());
    for (auto& f : found) out.push_back(std::move(f.second));
    return out;
}

std::vector<HomometricPairReport> search_minkowski_pairs(int nu, int nv, int box_w,
                                                         int box_h) {
    if (nu < 1 || nv < 1) throw Error("factor sizes must be at least 1");
    if (box_w < 1 || box_h < 1) throw Error("box dimensions must be at least 1");
    if (box_w > 8 || box_h > 8)
        throw BudgetExceeded("Minkowski pair search supports boxes up to 8x8");

    // Translation-canonical nu-point configurations inside the box.
    std::vector<std::vector<Cell>> us;
    {
        std::vector<Cell> cells(static_cast<std::size_t>(nu));
        for_each_combination(box_w * box_h, nu, [&](const std::vector<int>& idx) {
            bool tx = false, ty = false;
            for (std::size_t i = 0; i < idx.size(); ++i) {
                cells[i] = Cell{idx[i] % box_w, idx[i] / box_w};
                tx = tx || cells[i].x == 0;
                ty = ty || cells[i].y == 0;
            }
            if (tx && ty) us.push_back(cells);
        });
    }

    struct VList {
        std::vector<std::vector<Cell>> vs;
        std::vector<std::uint64_t> bits_pos, bits_neg;
    };
    std::map<std::pair<int, int>, VList> v_cache; // complementary box -> lists

    const auto v_list = [&](int vw, int vh) -> const VList& {
        const auto key = std::make_pair(vw, vh);
        auto it = v_cache.find(key);
        if (it != v_cache.end()) return it->second;
        VList list;
        std::vector<Cell> cells(static_cast<std::size_t>(nv));
        for_each_combination(vw * vh, nv, [&](const std::vector<int>& idx) {
            bool tx = false, ty = false;
            for (std::size_t i = 0; i < idx.size(); ++i) {
                cells[i] = Cell{idx[i] % vw, idx[i] / vw};
                tx = tx || cells[i].x == 0;
                ty = ty || cells[i].y == 0;
            }
            if (!tx || !ty) return;
            list.vs.push_back(cells);
            list.bits_pos.push_back(board_bits(cells));
            std::vector<Cell> neg;
            neg.reserve(cells.size());
            for (const Cell& c : cells) neg.push_back(Cell{-c.x, -c.y});
            list.bits_neg.push_back(board_bits(normalized_cells(std::move(neg))));
        });
        return v_cache.emplace(key, std::move(list)).first->second;
    };

    // Work estimate: sum over u of the complementary-box v count.
    std::int64_t estimate = 0;
    for (const std::vector<Cell>& u : us) {
        std::int64_t uw = 0, uh = 0;
        for (const Cell& c : u) {
            uw = std::max(uw, c.x);
            uh = std::max(uh, c.y);
        }
        estimate += binomial_capped((box_w - uw) * (box_h - uh), nv, kEnumerationBudget);
        if (estimate > kEnumerationBudget)
            throw BudgetExceeded("Minkowski factor enumeration estimate exceeds 10^8 pairs");
    }

    const auto popcount = [](std::uint64_t b) { return __builtin_popcountll(b); };
    const int want = nu * nv;

    std::vector<std::pair<std::string, HomometricPairReport>> found;
    std::unordered_set<std::string> reported;
    std::vector<Cell> acells, bcells;
    for (const std::vector<Cell>& u : us) {
        std::int64_t uw = 0, uh = 0;
        for (const Cell& c : u) {
            uw = std::max(uw, c.x);
            uh = std::max(uh, c.y);
        }
        const int vw = static_cast<int>(box_w - uw), vh = static_cast<int>(box_h - uh);
        if (vw < 1 || vh < 1) continue;
        const VList& list = v_list(vw, vh);
        for (std::size_t vi = 0; vi < list.vs.size(); ++vi) {
            std::uint64_t a = 0, b = 0;
            for (const Cell& c : u) {
                const int shift = static_cast<int>(c.x + 8 * c.y);
                a |= list.bits_pos[vi] << shift;
                b |= list.bits_neg[vi] << shift;
            }
            if (popcount(a) != want || popcount(b) != want) continue; // sum not direct
            if (!connected64(a) || !connected64(b)) continue;
            acells.clear();
            bcells.clear();
            for (int bit = 0; bit < 64; ++bit) {
                if (a >> bit & 1) acells.push_back(Cell{bit % 8, bit / 8});
                if (b >> bit & 1) bcells.push_back(Cell{bit % 8, bit / 8});
            }
            acells = normalized_cells(std::move(acells));
            bcells = normalized_cells(std::move(bcells));
            if (acells == bcells) continue;
            const Polyomino pa = as_window(acells);
            const Polyomino pb = as_window(bcells);
            if (congruent(pa, pb)) continue;
            if (!covariogram_equal(pa, pb)) continue; // cannot happen for direct sums
            std::string key = canonical_pair_key(acells, bcells);
            if (!reported.insert(key).second) continue;
            const bool ab = acells < bcells;
            found.emplace_back(std::move(key),
                               HomometricPairReport{ab ? pa : pb, ab ? pb : pa, false,
                                                    DiscreteAutocorrelation::of(pa)});
        }
    }
    std::sort(found.begin(), found.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    std::vector<HomometricPairReport> out;
    out.reserve(found.size());
    for (auto& f : found) out.push_back(std::move(f.second));
    return out;
}

std::vector<std::pair<std::vector<std::int64_t>, std::vector<std::int64_t>>>
search_1d_pairs(int n_points, std::int64_t max_coord) {
    if (n_points < 2) throw Error("1D search needs at least 2 points");
    if (max_coord < 1) throw Error("1D search needs max_coord >= 1");
    if (binomial_capped(max_coord + 1, n_points, kEnumerationBudget) > kEnumerationBudget)
        throw BudgetExceeded("1D subset enumeration estimate exceeds 10^8 sets");

    using Set = std::vector<std::int64_t>;
    std::map<Set, std::vector<Set>> groups; // positive difference multiset -> sets
    if (n_points > max_coord + 1) return {};

    const int mids = n_points - 2;
    Set s(static_cast<std::size_t>(n_points));
    Set mirror(s.size()), diffs;
    const auto visit = [&](const Set& set) {
        for (std::size_t i = 0; i < set.size(); ++i)
            mirror[i] = max_coord - set[set.size() - 1 - i];
        if (mirror < set) return; // reflection-canonical representative only
        diffs.clear();
        for (std::size_t i = 0; i < set.size(); ++i)
            for (std::size_t j = i + 1; j < set.size(); ++j) diffs.push_back(set[j] - set[i]);
        std::sort(diffs.begin(), diffs.end());
        if (diffs.back() != max_coord)
            throw Error("difference multiset lost the span"); // defensive
        groups[diffs].push_back(set);
    };

    s.front() = 0;
    s.back() = max_coord;
    if (mids == 0) {
        visit(s);
    } else {
        for_each_combination(static_cast<int>(max_coord - 1), mids,
                             [&](const std::vector<int>& idx) {
                                 for (int i = 0; i < mids; ++i)
                                     s[static_cast<std::size_t>(i + 1)] = idx[static_cast<std::size_t>(i)] + 1;
                                 visit(s);
                             });
    }

    std::vector<std::pair<Set, Set>> out;
    for (const auto& [key, sets] : groups) {
        for (std::size_t i = 0; i < sets.size(); ++i)
            for (std::size_t j = i + 1; j < sets.size(); ++j)
                out.emplace_back(sets[i], sets[j]);
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace aperimet
