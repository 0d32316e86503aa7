#include "aperimet/cut_project.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <unordered_map>

#include "aperimet/errors.hpp"
#include "aperimet/kernels/kernels.hpp"
#include "aperimet/threading.hpp"

namespace aperimet {

namespace {

constexpr double kHalfSqrt2 = std::numbers::sqrt2 * 0.5;

// Window extent in internal space, pre-widened so that the float prefilter
// is a strict superset of the exact membership test.
struct StarBox {
    double x0, x1, y0, y1;
    double circumradius; // about the origin, of the unwidened box
};

StarBox star_box(const Polyomino& w, double margin) {
    const double ax = w.anchor_x().to_double(), ay = w.anchor_y().to_double();
    StarBox b;
    b.x0 = static_cast<double>(w.min_x()) + ax;
    b.x1 = static_cast<double>(w.max_x() + 1) + ax;
    b.y0 = static_cast<double>(w.min_y()) + ay;
    b.y1 = static_cast<double>(w.max_y() + 1) + ay;
    b.circumradius = 0.0;
    for (double cx : {b.x0, b.x1})
        for (double cy : {b.y0, b.y1})
            b.circumradius = std::max(b.circumradius, std::hypot(cx, cy));
    b.x0 -= margin;
    b.x1 += margin;
    b.y0 -= margin;
    b.y1 += margin;
    return b;
}

struct AxisCells {
    std::int64_t first;
    int count; // 1, or 2 when the coordinate lies exactly on a grid line
};

AxisCells axis_cells(const QuadHalf& star, const Rational& anchor) {
    const QuadRat t = QuadRat::of(star) - QuadRat(anchor);
    const std::int64_t ix = t.floor();
    const bool on_line = t.cmp_int(ix) == 0;
    return on_line ? AxisCells{ix - 1, 2} : AxisCells{ix, 1};
}

} // namespace

Membership classify_star_point(const Polyomino& window, const Vec2H& star) {
    const AxisCells cx = axis_cells(star.x, window.anchor_x());
    const AxisCells cy = axis_cells(star.y, window.anchor_y());
    int present = 0;
    for (int i = 0; i < cx.count; ++i)
        for (int j = 0; j < cy.count; ++j)
            present += window.contains({cx.first + i, cy.first + j}) ? 1 : 0;
    if (present == cx.count * cy.count) return Membership::inside;
    if (present == 0) return Membership::outside;
    return Membership::boundary;
}

ModelSetPatch generate_patch(const Polyomino& window, double radius) {
    if (!(radius > 0.0)) throw Error("patch radius must be positive");
    const StarBox box = star_box(window, 1e-6);
    const std::int64_t N =
        static_cast<std::int64_t>(std::floor((radius + box.circumradius) * 0.5)) + 1;
    const std::int64_t side = 2 * N + 1;
    const double r2 = radius * radius;
    const double bx_abs = std::max(std::fabs(box.x0), std::fabs(box.x1));
    const double by_abs = std::max(std::fabs(box.y0), std::fabs(box.y1));

    const int shards = std::max(1, thread_count());
    std::vector<std::vector<PatchPoint>> found(static_cast<std::size_t>(shards));

    parallel_chunks(0, side * side, [&](std::int64_t lo, std::int64_t hi, int shard) {
        std::vector<std::uint8_t> mask;
        auto& out = found[static_cast<std::size_t>(shard)];
        for (std::int64_t p = lo; p < hi; ++p) {
            const std::int64_t n2 = p / side - N;
            const std::int64_t n4 = p % side - N;
            const double a = static_cast<double>(n2 - n4) * kHalfSqrt2;
            const double b = static_cast<double>(n2 + n4) * kHalfSqrt2;
            // xd - xs = 2a and yd - ys = 2b, so rows violating these coarse
            // bounds contain no candidate at all.
            if (std::fabs(2.0 * a) > radius + bx_abs + 1.0) continue;
            if (std::fabs(2.0 * b) > radius + by_abs + 1.0) continue;
            const std::int64_t n3lo =
                static_cast<std::int64_t>(std::ceil(box.y0 + b)) - 1;
            const std::int64_t n3hi =
                static_cast<std::int64_t>(std::floor(box.y1 + b)) + 1;
            for (std::int64_t n3 = n3lo; n3 <= n3hi; ++n3) {
                const double yd = static_cast<double>(n3) + b;
                if (yd * yd >= r2) continue;
                const std::int64_t n1lo =
                    static_cast<std::int64_t>(std::ceil(box.x0 + a)) - 1;
                const std::int64_t n1hi =
                    static_cast<std::int64_t>(std::floor(box.x1 + a)) + 1;
                if (n1hi < n1lo) continue;
                const std::size_t count = static_cast<std::size_t>(n1hi - n1lo + 1);
                mask.resize(count);
                kernels::RowScan rs;
                rs.scale = 1.0;
                rs.a = a;
                rs.yd = yd;
                rs.ys = static_cast<double>(n3) - b;
                rs.r2 = r2;
                rs.bx0 = box.x0;
                rs.bx1 = box.x1;
                rs.by0 = box.y0;
                rs.by1 = box.y1;
                rs.strict_radius = true;
                kernels::scan_row(rs, n1lo, count, mask.data());
                for (std::size_t k = 0; k < count; ++k) {
                    if (!mask[k]) continue;
                    const LatticeVector n(n1lo + static_cast<std::int64_t>(k), n2, n3, n4);
                    const Membership m = classify_star_point(window, star_image(n));
                    if (m == Membership::boundary)
                        throw BoundaryHit(n.n[0], n.n[1], n.n[2], n.n[3]);
                    if (m == Membership::inside) {
                        const Vec2H d = direct_image(n);
                        out.push_back({n, d.x, d.y});
                    }
                }
            }
        }
    });

    ModelSetPatch patch{.points = {}, .radius = radius, .window = window};
    std::size_t total = 0;
    for (const auto& v : found) total += v.size();
    patch.points.reserve(total);
    for (auto& v : found)
        patch.points.insert(patch.points.end(), v.begin(), v.end());
    std::sort(patch.points.begin(), patch.points.end(),
              [](const PatchPoint& a, const PatchPoint& b) { return a.n < b.n; });
    return patch;
}

bool genericity_check(const Polyomino& window, std::int64_t bound) {
    if (bound <= 0) throw Error("genericity bound must be positive");
    const StarBox box = star_box(window, 1e-3);
    for (std::int64_t n2 = -bound; n2 <= bound; ++n2) {
        for (std::int64_t n4 = -bound; n4 <= bound; ++n4) {
            const double a = static_cast<double>(n2 - n4) * kHalfSqrt2;
            const double b = static_cast<double>(n2 + n4) * kHalfSqrt2;
            const std::int64_t n3lo = std::max(
                -bound, static_cast<std::int64_t>(std::ceil(box.y0 + b)) - 1);
            const std::int64_t n3hi = std::min(
                bound, static_cast<std::int64_t>(std::floor(box.y1 + b)) + 1);
            for (std::int64_t n3 = n3lo; n3 <= n3hi; ++n3) {
                const double ys = static_cast<double>(n3) - b;
                if (ys < box.y0 || ys > box.y1) continue;
                const std::int64_t n1lo = std::max(
                    -bound, static_cast<std::int64_t>(std::ceil(box.x0 + a)) - 1);
                const std::int64_t n1hi = std::min(
                    bound, static_cast<std::int64_t>(std::floor(box.x1 + a)) + 1);
                for (std::int64_t n1 = n1lo; n1 <= n1hi; ++n1) {
                    const double xs = static_cast<double>(n1) - a;
                    if (xs < box.x0 || xs > box.x1) continue;
                    const LatticeVector n(n1, n2, n3, n4);
                    if (classify_star_point(window, star_image(n)) == Membership::boundary)
                        return false;
                }
            }
        }
    }
    return true;
}

std::vector<PatchPoint> patch_difference(const ModelSetPatch& a, const ModelSetPatch& b) {
    if (a.radius != b.radius) throw Error("patch difference requires equal radii");
    std::vector<PatchPoint> out;
    auto ia = a.points.begin();
    auto ib = b.points.begin();
    while (ia != a.points.end()) {
        if (ib == b.points.end() || ia->n < ib->n) {
            out.push_back(*ia);
            ++ia;
        } else if (ib->n < ia->n) {
            ++ib;
        } else {
            ++ia;
            ++ib;
        }
    }
    return out;
}

double density_estimate(const ModelSetPatch& p) {
    if (p.points.empty()) throw Error("density of an empty patch is undefined");
    return static_cast<double>(p.points.size()) / (std::numbers::pi * p.radius * p.radius);
}

double min_pair_distance(const ModelSetPatch& p) {
    const std::size_t n = p.points.size();
    if (n < 2) return std::numeric_limits<double>::infinity();
    std::vector<double> xs(n), ys(n);
    for (std::size_t i = 0; i < n; ++i) {
        xs[i] = p.points[i].x.to_double();
        ys[i] = p.points[i].y.to_double();
    }
    // Bucket grid of pitch 2: any nearest neighbour in these point sets is
    // far closer than 2, so scanning the 3x3 neighbourhood suffices; the
    // quadratic fallback covers degenerate tiny patches.
    std::unordered_map<Cell, std::vector<std::size_t>, CellHash> grid;
    for (std::size_t i = 0; i < n; ++i) {
        grid[{static_cast<std::int64_t>(std::floor(xs[i] * 0.5)),
              static_cast<std::int64_t>(std::floor(ys[i] * 0.5))}]
            .push_back(i);
    }
    double best2 = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
        const std::int64_t gx = static_cast<std::int64_t>(std::floor(xs[i] * 0.5));
        const std::int64_t gy = static_cast<std::int64_t>(std::floor(ys[i] * 0.5));
        for (std::int64_t dx = -1; dx <= 1; ++dx)
            for (std::int64_t dy = -1; dy <= 1; ++dy) {
                auto it = grid.find({gx + dx, gy + dy});
                if (it == grid.end()) continue;
                for (std::size_t j : it->second) {
                    if (j <= i) continue;
                    const double ddx = xs[i] - xs[j], ddy = ys[i] - ys[j];
                    best2 = std::min(best2, ddx * ddx + ddy * ddy);
                }
            }
    }
    if (!std::isfinite(best2)) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                const double ddx = xs[i] - xs[j], ddy = ys[i] - ys[j];
                best2 = std::min(best2, ddx * ddx + ddy * ddy);
            }
    }
    return std::sqrt(best2);
}

} // namespace aperimet
