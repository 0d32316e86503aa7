#include "aperimet/io/csv.hpp"

#include <cstdio>
#include <fstream>

#include "aperimet/errors.hpp"
#include "aperimet/lattice.hpp"

namespace aperimet::io {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string grid_csv(const CovariogramGrid& g) {
    std::string out = "vx,vy,g\n";
    const auto mx = static_cast<std::int64_t>((g.nx - 1) / 2);
    const auto my = static_cast<std::int64_t>((g.ny - 1) / 2);
    for (std::size_t iy = 0; iy < g.ny; ++iy) {
        for (std::size_t ix = 0; ix < g.nx; ++ix) {
            // Recomputed exactly as the grid filled them: signed index * step.
            const double vx = static_cast<double>(static_cast<std::int64_t>(ix) - mx) * g.step;
            const double vy = static_cast<double>(static_cast<std::int64_t>(iy) - my) * g.step;
            out += format_double(vx);
            out += ',';
            out += format_double(vy);
            out += ',';
            out += format_double(g.at(ix, iy));
            out += '\n';
        }
    }
    return out;
}

std::string patch_csv(const ModelSetPatch& p) {
    std::string out = "n1,n2,n3,n4,x,y,xstar,ystar\n";
    for (const PatchPoint& pt : p.points) {
        const Vec2H star = star_image(pt.n);
        for (int i = 0; i < 4; ++i) {
            out += std::to_string(pt.n[i]);
            out += ',';
        }
        out += format_double(pt.x.to_double());
        out += ',';
        out += format_double(pt.y.to_double());
        out += ',';
        out += format_double(star.x.to_double());
        out += ',';
        out += format_double(star.y.to_double());
        out += '\n';
    }
    return out;
}

std::string autocorr_csv(const std::vector<AutocorrRow>& rows) {
    std::string out = "n1,n2,n3,n4,dx,dy,eta,empirical\n";
    for (const AutocorrRow& r : rows) {
        for (int i = 0; i < 4; ++i) {
            out += std::to_string(r.n[i]);
            out += ',';
        }
        out += format_double(r.dx);
        out += ',';
        out += format_double(r.dy);
        out += ',';
        out += format_double(r.eta);
        out += ',';
        out += format_double(r.empirical);
        out += '\n';
    }
    return out;
}

std::string peaks_csv(const PeakList& list) {
    std::string out = "n1,n2,n3,n4,kx,ky,intensity\n";
    for (const BraggPeak& p : list.peaks) {
        for (int i = 0; i < 4; ++i) {
            out += std::to_string(p.n[i]);
            out += ',';
        }
        out += format_double(p.kx);
        out += ',';
        out += format_double(p.ky);
        out += ',';
        out += format_double(p.intensity);
        out += '\n';
    }
    return out;
}

void write_text(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write " + path);
    out << content;
}

} // namespace aperimet::io
