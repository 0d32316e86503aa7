#include "aperimet/io/runner.hpp"

#include <charconv>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include "aperimet/autocorr.hpp"
#include "aperimet/covariogram.hpp"
#include "aperimet/cut_project.hpp"
#include "aperimet/diffraction.hpp"
#include "aperimet/errors.hpp"
#include "aperimet/homometry_search.hpp"
#include "aperimet/io/csv.hpp"
#include "aperimet/io/svg.hpp"
#include "aperimet/io/window_format.hpp"
#include "aperimet/kernels/kernels.hpp"
#include "aperimet/threading.hpp"

namespace aperimet::io {

namespace {

const char* command_name(RunConfig::Command c) {
    switch (c) {
        case RunConfig::Command::covariogram: return "covariogram";
        case RunConfig::Command::patch: return "patch";
        case RunConfig::Command::autocorr: return "autocorr";
        case RunConfig::Command::diffract: return "diffract";
        case RunConfig::Command::homometry: return "homometry";
        case RunConfig::Command::search: return "search";
        default: return "reconstruct";
    }
}

// Key-value metadata file; never includes time stamps, so bytes depend only
// on the configuration (and thread count, which is recorded).
class Meta {
public:
    explicit Meta(const RunConfig& c) {
        add("tool", kToolName);
        add("version", kToolVersion);
        add("command", command_name(c.command));
    }
    void add(const std::string& k, const std::string& v) { kv_.emplace_back(k, v); }
    void add(const std::string& k, double v) { kv_.emplace_back(k, format_double(v)); }
    void add(const std::string& k, std::int64_t v) { kv_.emplace_back(k, std::to_string(v)); }
    void finish(const std::filesystem::path& dir) {
        add("threads", static_cast<std::int64_t>(thread_count()));
        add("simd", kernels::backend_name(kernels::active_backend()));
        std::string out;
        for (const auto& [k, v] : kv_) out += k + ' ' + v + '\n';
        write_text((dir / "meta.txt").string(), out);
    }

private:
    std::vector<std::pair<std::string, std::string>> kv_;
};

std::string certificate_text(const DiscreteAutocorrelation& da) {
    std::string out = "# shared difference count map: dx dy count\n";
    for (const auto& [d, c] : da.counts())
        out += std::to_string(d.x) + ' ' + std::to_string(d.y) + ' ' + std::to_string(c) + '\n';
    return out;
}

std::string cells_inline(const Polyomino& p) {
    std::string s;
    for (const Cell& c : p.cells())
        s += "(" + std::to_string(c.x) + "," + std::to_string(c.y) + ")";
    return s;
}

void run_impl(const RunConfig& c) {
    const std::filesystem::path dir(c.out_dir);
    std::filesystem::create_directories(dir);
    Meta meta(c);

    switch (c.command) {
        case RunConfig::Command::covariogram: {
            const Polyomino w = parse_window(c.window_path);
            const Rational step = parse_rational_arg(c.step);
            const CovariogramGrid grid = covariogram_grid(w, step);
            const DifferenceBody body = difference_body(w);
            write_text((dir / "grid.csv").string(), grid_csv(grid));
            write_text((dir / "covariogram.svg").string(), covariogram_svg(grid, body));
            meta.add("window", c.window_path);
            meta.add("step", c.step);
            meta.add("grid_nx", static_cast<std::int64_t>(grid.nx));
            meta.add("grid_ny", static_cast<std::int64_t>(grid.ny));
            meta.add("support_cells", static_cast<std::int64_t>(body.support_cells.size()));
            break;
        }
        case RunConfig::Command::patch: {
            const Polyomino w = parse_window(c.window_path);
            const ModelSetPatch p = generate_patch(w, c.radius);
            write_text((dir / "patch.csv").string(), patch_csv(p));
            write_text((dir / "patch.svg").string(), patch_svg(p));
            meta.add("window", c.window_path);
            meta.add("radius", c.radius);
            meta.add("points", static_cast<std::int64_t>(p.points.size()));
            meta.add("density", density_estimate(p));
            if (p.points.size() >= 2) meta.add("min_distance", min_pair_distance(p));
            break;
        }
        case RunConfig::Command::autocorr: {
            const Polyomino w = parse_window(c.window_path);
            const ModelSetPatch p = generate_patch(w, c.radius);
            const EmpiricalAutocorrelation emp = empirical_autocorrelation(p, c.max_offset);
            const auto ordered = top_weights(emp, emp.weights.size());
            std::vector<AutocorrRow> rows;
            rows.reserve(ordered.size());
            for (const auto& [d, weight] : ordered) {
                const Vec2H v = direct_image(d);
                rows.push_back(AutocorrRow{d, v.x.to_double(), v.y.to_double(),
                                           eta(w, d).to_double(), weight});
            }
            write_text((dir / "autocorr.csv").string(), autocorr_csv(rows));
            meta.add("window", c.window_path);
            meta.add("radius", c.radius);
            meta.add("max_offset", c.max_offset);
            meta.add("points", static_cast<std::int64_t>(p.points.size()));
            meta.add("rows", static_cast<std::int64_t>(rows.size()));
            break;
        }
        case RunConfig::Command::diffract: {
            const Polyomino w = parse_window(c.window_path);
            const PeakList list = peak_list(w, c.k_max, c.intensity_min);
            write_text((dir / "peaks.csv").string(), peaks_csv(list));
            write_text((dir / "peaks.svg").string(), peaks_svg(list));
            meta.add("window", c.window_path);
            meta.add("kmax", c.k_max);
            meta.add("imin", c.intensity_min);
            meta.add("r_star", list.r_star);
            meta.add("peaks", static_cast<std::int64_t>(list.peaks.size()));
            break;
        }
        case RunConfig::Command::homometry: {
            if (c.window2_path.empty())
                throw Error("homometry needs --window and --window2");
            const Polyomino w1 = parse_window(c.window_path);
            const Polyomino w2 = parse_window(c.window2_path);
            const bool hom = homometric(w1, w2);
            const bool cong = congruent(w1, w2);
            const ModelSetPatch p1 = generate_patch(w1, c.radius);
            const ModelSetPatch p2 = generate_patch(w2, c.radius);
            const std::size_t only1 = patch_difference(p1, p2).size();
            const std::size_t only2 = patch_difference(p2, p1).size();
            write_text((dir / "difference.svg").string(), difference_svg(p1, p2));
            std::string verdict;
            verdict += std::string("homometric ") + (hom ? "true" : "false") + '\n';
            verdict += std::string("congruent ") + (cong ? "true" : "false") + '\n';
            verdict += "left_points " + std::to_string(p1.points.size()) + '\n';
            verdict += "right_points " + std::to_string(p2.points.size()) + '\n';
            verdict += "left_only " + std::to_string(only1) + '\n';
            verdict += "right_only " + std::to_string(only2) + '\n';
            write_text((dir / "homometry.txt").string(), verdict);
            meta.add("window", c.window_path);
            meta.add("window2", c.window2_path);
            meta.add("radius", c.radius);
            meta.add("homometric", hom ? "true" : "false");
            break;
        }
        case RunConfig::Command::reconstruct: {
            const HomometricPairReport rep = reconstruct_reference_pair();
            write_window(rep.left, (dir / "left.win").string());
            write_window(rep.right, (dir / "right.win").string());
            write_text((dir / "certificate.txt").string(), certificate_text(rep.certificate));
            meta.add("left_cells", static_cast<std::int64_t>(rep.left.area()));
            meta.add("right_cells", static_cast<std::int64_t>(rep.right.area()));
            meta.add("congruent", rep.congruent ? "true" : "false");
            break;
        }
        case RunConfig::Command::search: {
            if (c.one_d) {
                const auto pairs = search_1d_pairs(c.points_1d, c.span_1d);
                std::string out;
                for (const auto& [sa, sb] : pairs) {
                    for (std::size_t i = 0; i < sa.size(); ++i)
                        out += (i ? " " : "") + std::to_string(sa[i]);
                    out += " | ";
                    for (std::size_t i = 0; i < sb.size(); ++i)
                        out += (i ? " " : "") + std::to_string(sb[i]);
                    out += '\n';
                }
                write_text((dir / "pairs.txt").string(), out);
                meta.add("mode", "1d");
                meta.add("points", static_cast<std::int64_t>(c.points_1d));
                meta.add("span", c.span_1d);
                meta.add("pairs", static_cast<std::int64_t>(pairs.size()));
                break;
            }
            std::vector<HomometricPairReport> reports;
            if (c.minkowski) {
                const int bw = c.box_w < 1 ? 5 : c.box_w;
                const int bh = c.box_h < 1 ? 7 : c.box_h;
                reports = search_minkowski_pairs(c.nu, c.nv, bw, bh);
                meta.add("mode", "minkowski");
                meta.add("nu", static_cast<std::int64_t>(c.nu));
                meta.add("nv", static_cast<std::int64_t>(c.nv));
                meta.add("box_w", static_cast<std::int64_t>(bw));
                meta.add("box_h", static_cast<std::int64_t>(bh));
            } else {
                reports = search_polyomino_pairs(c.n_cells, c.box_w, c.box_h);
                meta.add("mode", "polyomino");
                meta.add("ncells", static_cast<std::int64_t>(c.n_cells));
                meta.add("box_w", static_cast<std::int64_t>(c.box_w));
                meta.add("box_h", static_cast<std::int64_t>(c.box_h));
            }
            std::string summary;
            for (std::size_t i = 0; i < reports.size(); ++i) {
                summary += "pair " + std::to_string(i) + " left " +
                           cells_inline(reports[i].left) + " right " +
                           cells_inline(reports[i].right) + '\n';
            }
            write_text((dir / "summary.txt").string(), summary);
            const std::size_t emit = std::min<std::size_t>(reports.size(), 20);
            for (std::size_t i = 0; i < emit; ++i) {
                char stem[32];
                std::snprintf(stem, sizeof stem, "pair%03zu", i);
                write_window(reports[i].left, (dir / (std::string(stem) + "_left.win")).string());
                write_window(reports[i].right,
                             (dir / (std::string(stem) + "_right.win")).string());
                write_text((dir / (std::string(stem) + "_certificate.txt")).string(),
                           certificate_text(reports[i].certificate));
            }
            meta.add("pairs", static_cast<std::int64_t>(reports.size()));
            break;
        }
    }
    meta.finish(dir);
}

} // namespace

Rational parse_rational_arg(const std::string& tok) {
    const auto parse_int = [&](const std::string& s) {
        std::int64_t v = 0;
        const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc() || ptr != s.data() + s.size())
            throw Error("not an exact rational: '" + tok + "'");
        return v;
    };
    const auto slash = tok.find('/');
    if (slash != std::string::npos) {
        const std::int64_t p = parse_int(tok.substr(0, slash));
        const std::int64_t q = parse_int(tok.substr(slash + 1));
        if (q <= 0) throw Error("rational denominator must be positive: '" + tok + "'");
        return Rational(p, q);
    }
    const auto dot = tok.find('.');
    if (dot == std::string::npos) return Rational(parse_int(tok), 1);
    const std::string ipart = tok.substr(0, dot);
    const std::string fpart = tok.substr(dot + 1);
    if (fpart.empty() || fpart.size() > 17)
        throw Error("not an exact rational: '" + tok + "'");
    const bool neg = !ipart.empty() && ipart[0] == '-';
    const std::int64_t whole =
        ipart.empty() || ipart == "-" ? 0 : parse_int(neg ? ipart.substr(1) : ipart);
    const std::int64_t frac = parse_int(fpart);
    int128 den = 1;
    for (std::size_t i = 0; i < fpart.size(); ++i) den *= 10;
    const int128 num = int128(whole) * den + frac;
    return Rational(checked_i64(neg ? -num : num), checked_i64(den));
}

int run(const RunConfig& c) {
    try {
        run_impl(c);
        return 0;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}

} // namespace aperimet::io
