#include "aperimet/autocorr.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "aperimet/threading.hpp"

namespace aperimet {

QuadRat eta(const Polyomino& window, const LatticeVector& x) {
    const Vec2H s = star_image(x);
    const QuadRat g = covariogram_eval(window, QuadRat::of(s.x), QuadRat::of(s.y));
    return g * QuadRat(1, 0, 4);
}

namespace {

using CountMap = std::unordered_map<LatticeVector, std::int64_t, LatticeVectorHash>;

void merge_into(CountMap& into, const CountMap& from) {
    for (const auto& [d, c] : from) into[d] += c;
}

} // namespace

EmpiricalAutocorrelation empirical_autocorrelation(const ModelSetPatch& p, double max_offset) {
    const std::size_t n = p.points.size();
    const int shards = std::max(1, thread_count());
    std::vector<CountMap> partial(static_cast<std::size_t>(shards));

    if (max_offset < 0.0) {
        parallel_chunks(0, static_cast<std::int64_t>(n), [&](std::int64_t lo, std::int64_t hi,
                                                             int shard) {
            CountMap& m = partial[static_cast<std::size_t>(shard)];
            for (std::int64_t i = lo; i < hi; ++i) {
                for (std::size_t j = 0; j < n; ++j)
                    ++m[p.points[static_cast<std::size_t>(i)].n - p.points[j].n];
            }
        });
    } else {
        // Sweep over points ordered by direct x; only pairs within the
        // offset box can contribute, so the inner window stays short.
        std::vector<std::size_t> order(n);
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::vector<double> xs(n), ys(n);
        for (std::size_t i = 0; i < n; ++i) {
            xs[i] = p.points[i].x.to_double();
            ys[i] = p.points[i].y.to_double();
        }
        std::sort(order.begin(), order.end(),
                  [&xs](std::size_t a, std::size_t b) { return xs[a] < xs[b]; });
        parallel_chunks(0, static_cast<std::int64_t>(n), [&](std::int64_t lo, std::int64_t hi,
                                                             int shard) {
            CountMap& m = partial[static_cast<std::size_t>(shard)];
            for (std::int64_t oi = lo; oi < hi; ++oi) {
                const std::size_t i = order[static_cast<std::size_t>(oi)];
                m[LatticeVector()] += 1; // the i = j pair
                for (std::size_t oj = static_cast<std::size_t>(oi) + 1; oj < n; ++oj) {
                    const std::size_t j = order[oj];
                    if (xs[j] - xs[i] > max_offset) break;
                    if (std::fabs(ys[j] - ys[i]) > max_offset) continue;
                    const LatticeVector d = p.points[i].n - p.points[j].n;
                    ++m[d];
                    ++m[-d];
                }
            }
        });
    }

    CountMap counts;
    for (const auto& m : partial) merge_into(counts, m);

    EmpiricalAutocorrelation out;
    out.radius = p.radius;
    const double inv = 1.0 / (std::numbers::pi * p.radius * p.radius);
    out.weights.reserve(counts.size());
    for (const auto& [d, c] : counts)
        out.weights.emplace(d, static_cast<double>(c) * inv);
    return out;
}

std::vector<std::pair<LatticeVector, double>> top_weights(const EmpiricalAutocorrelation& e,
                                                          std::size_t k) {
    std::vector<std::pair<LatticeVector, double>> all(e.weights.begin(), e.weights.end());
    std::sort(all.begin(), all.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
    });
    if (all.size() > k) all.resize(k);
    return all;
}

bool homometric(const Polyomino& a, const Polyomino& b) { return covariogram_equal(a, b); }

} // namespace aperimet
