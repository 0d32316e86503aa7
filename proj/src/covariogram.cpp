#include "aperimet/covariogram.hpp"

#include <algorithm>
#include <map>
#include <unordered_set>

namespace aperimet {

DiscreteAutocorrelation DiscreteAutocorrelation::of_points(const std::vector<Cell>& pts) {
    DiscreteAutocorrelation out;
    for (const Cell& a : pts)
        for (const Cell& b : pts) ++out.counts_[{b.x - a.x, b.y - a.y}];
    return out;
}

DiscreteAutocorrelation DiscreteAutocorrelation::of(const Polyomino& p) {
    return of_points(p.cells());
}

std::uint64_t DiscreteAutocorrelation::fingerprint() const {
    std::uint64_t h = 0xCBF29CE484222325ull;
    auto mix = [&h](std::uint64_t v) {
        h ^= v;
        h *= 0x100000001B3ull;
        h ^= h >> 29;
    };
    for (const auto& [d, c] : counts_) {
        mix(static_cast<std::uint64_t>(d.x));
        mix(static_cast<std::uint64_t>(d.y));
        mix(static_cast<std::uint64_t>(c));
    }
    return h;
}

namespace {

template <class F>
struct FieldOps;

template <>
struct FieldOps<Rational> {
    static Rational from_int(std::int64_t v) { return Rational(v, 1); }
    static Rational zero() { return Rational(0, 1); }
};

template <>
struct FieldOps<QuadRat> {
    static QuadRat from_int(std::int64_t v) { return QuadRat(v, 0, 1); }
    static QuadRat zero() { return QuadRat(0, 0, 1); }
};

template <class F>
F eval_field(const DiscreteAutocorrelation& n, const F& vx, const F& vy) {
    const F one = FieldOps<F>::from_int(1);
    F acc = FieldOps<F>::zero();
    for (const auto& [d, c] : n.counts()) {
        const F tx = (vx - FieldOps<F>::from_int(d.x)).abs();
        if (!(tx < one)) continue;
        const F ty = (vy - FieldOps<F>::from_int(d.y)).abs();
        if (!(ty < one)) continue;
        acc = acc + FieldOps<F>::from_int(c) * (one - tx) * (one - ty);
    }
    return acc;
}

} // namespace

Rational covariogram_eval(const DiscreteAutocorrelation& n, const Rational& vx,
                          const Rational& vy) {
    return eval_field(n, vx, vy);
}

QuadRat covariogram_eval(const DiscreteAutocorrelation& n, const QuadRat& vx,
                         const QuadRat& vy) {
    return eval_field(n, vx, vy);
}

Rational covariogram_eval(const Polyomino& p, const Rational& vx, const Rational& vy) {
    return eval_field(DiscreteAutocorrelation::of(p), vx, vy);
}

QuadRat covariogram_eval(const Polyomino& p, const QuadRat& vx, const QuadRat& vy) {
    return eval_field(DiscreteAutocorrelation::of(p), vx, vy);
}

double covariogram_eval(const Polyomino& p, double vx, double vy) {
    const kernels::CovOffsets d = covariogram_offsets(DiscreteAutocorrelation::of(p));
    double out;
    kernels::covariogram_batch(d, &vx, &vy, 1, &out);
    return out;
}

kernels::CovOffsets covariogram_offsets(const DiscreteAutocorrelation& n) {
    kernels::CovOffsets out;
    for (const auto& [d, c] : n.counts()) {
        if (d.x == 0 && d.y == 0) {
            out.n0 = static_cast<double>(c);
        } else if (d.x > 0 || (d.x == 0 && d.y > 0)) { // canonical positive half
            out.dx.push_back(static_cast<double>(d.x));
            out.dy.push_back(static_cast<double>(d.y));
            out.cnt.push_back(static_cast<double>(c));
        }
    }
    return out;
}

bool covariogram_equal(const Polyomino& a, const Polyomino& b) {
    return DiscreteAutocorrelation::of(a) == DiscreteAutocorrelation::of(b);
}

namespace {

// Follow the edges between support cells and their complement into closed
// counterclockwise loops of grid vertices.
std::vector<std::vector<Cell>> trace_boundary(const std::vector<Cell>& cells) {
    std::unordered_set<Cell, CellHash> in(cells.begin(), cells.end());
    const auto present = [&in](std::int64_t x, std::int64_t y) {
        return in.count({x, y}) != 0;
    };
    // Directed boundary edges vertex->vertex, keyed by start vertex. With the
    // region kept on the left, each loop is traversed counterclockwise.
    std::map<Cell, std::vector<Cell>> next;
    for (const Cell& c : cells) {
        if (!present(c.x, c.y - 1)) next[{c.x, c.y}].push_back({c.x + 1, c.y});         // bottom
        if (!present(c.x + 1, c.y)) next[{c.x + 1, c.y}].push_back({c.x + 1, c.y + 1}); // right
        if (!present(c.x, c.y + 1)) next[{c.x + 1, c.y + 1}].push_back({c.x, c.y + 1}); // top
        if (!present(c.x - 1, c.y)) next[{c.x, c.y + 1}].push_back({c.x, c.y});         // left
    }
    std::vector<std::vector<Cell>> loops;
    while (!next.empty()) {
        auto first = next.begin();
        std::vector<Cell> loop{first->first};
        Cell cur = first->first;
        for (;;) {
            auto it = next.find(cur);
            if (it == next.end()) break;
            Cell to = it->second.back();
            it->second.pop_back();
            if (it->second.empty()) next.erase(it);
            if (to == loop.front()) break;
            loop.push_back(to);
            cur = to;
        }
        loops.push_back(std::move(loop));
    }
    return loops;
}

} // namespace

DifferenceBody difference_body(const Polyomino& p) {
    DifferenceBody out;
    const DiscreteAutocorrelation n = DiscreteAutocorrelation::of(p);
    std::unordered_set<Cell, CellHash> support;
    for (const auto& [d, c] : n.counts()) {
        (void)c;
        out.offsets.push_back(d);
        // d + (-1,1)^2 covers the four unit cells with corner at d.
        for (std::int64_t dx = -1; dx <= 0; ++dx)
            for (std::int64_t dy = -1; dy <= 0; ++dy) support.insert({d.x + dx, d.y + dy});
    }
    out.support_cells.assign(support.begin(), support.end());
    std::sort(out.support_cells.begin(), out.support_cells.end());
    out.boundary_loops = trace_boundary(out.support_cells);
    return out;
}

std::complex<double> window_fourier_transform(const Polyomino& p, double kx, double ky) {
    const double ax = p.anchor_x().to_double() + 0.5;
    const double ay = p.anchor_y().to_double() + 0.5;
    double re = 0.0, im = 0.0;
    for (const Cell& c : p.cells()) {
        const double t = kx * (static_cast<double>(c.x) + ax) + ky * (static_cast<double>(c.y) + ay);
        double s, co;
        kernels::sincos2pi_one(t, s, co);
        re += co;
        im += s;
    }
    const double env = kernels::sinc_pi(kx) * kernels::sinc_pi(ky);
    return {env * re, env * im};
}

double cosine_sum_transform(const Polyomino& p, double kx, double ky) {
    const DiscreteAutocorrelation n = DiscreteAutocorrelation::of(p);
    double acc = 0.0;
    for (const auto& [d, c] : n.counts()) {
        const double t = kx * static_cast<double>(d.x) + ky * static_cast<double>(d.y);
        double s, co;
        kernels::sincos2pi_one(t, s, co);
        acc += static_cast<double>(c) * co;
    }
    const double sx = kernels::sinc_pi(kx), sy = kernels::sinc_pi(ky);
    return (sx * sx) * (sy * sy) * acc;
}

CovariogramGrid covariogram_grid(const Polyomino& p, const Rational& step) {
    if (!(Rational(0, 1) < step)) throw Error("grid step must be positive");
    const DiscreteAutocorrelation n = DiscreteAutocorrelation::of(p);
    std::int64_t ext_x = 0, ext_y = 0;
    for (const auto& [d, c] : n.counts()) {
        (void)c;
        ext_x = std::max<std::int64_t>(ext_x, std::llabs(d.x) + 1);
        ext_y = std::max<std::int64_t>(ext_y, std::llabs(d.y) + 1);
    }
    // Symmetric index range [-m, m] covering the support extent.
    const auto steps_for = [&step](std::int64_t extent) {
        const Rational m = Rational(extent, 1) / step;
        std::int64_t k = m.floor();
        if (!(Rational(k, 1) == m)) ++k; // ceil
        return k;
    };
    const std::int64_t mx = steps_for(ext_x);
    const std::int64_t my = steps_for(ext_y);
    const double sd = step.to_double();

    CovariogramGrid grid;
    grid.step = sd;
    grid.nx = static_cast<std::size_t>(2 * mx + 1);
    grid.ny = static_cast<std::size_t>(2 * my + 1);
    grid.x0 = static_cast<double>(-mx) * sd;
    grid.y0 = static_cast<double>(-my) * sd;
    std::vector<double> vx(grid.nx * grid.ny), vy(grid.nx * grid.ny);
    std::size_t idx = 0;
    for (std::int64_t iy = -my; iy <= my; ++iy)
        for (std::int64_t ix = -mx; ix <= mx; ++ix, ++idx) {
            vx[idx] = static_cast<double>(ix) * sd;
            vy[idx] = static_cast<double>(iy) * sd;
        }
    grid.values.resize(vx.size());
    kernels::covariogram_batch(covariogram_offsets(n), vx.data(), vy.data(), vx.size(),
                               grid.values.data());
    return grid;
}

} // namespace aperimet
