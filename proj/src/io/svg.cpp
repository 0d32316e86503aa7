#include "aperimet/io/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <utility>
#include <vector>

namespace aperimet::io {

namespace {

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

// World-coordinate canvas with the y axis pointing up.
class Canvas {
public:
    Canvas(double x0, double y0, double x1, double y1, double pixels_per_unit)
        : x0_(x0), y1_(y1), scale_(pixels_per_unit),
          width_((x1 - x0) * pixels_per_unit), height_((y1 - y0) * pixels_per_unit) {
        body_ += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(width_) +
                 "\" height=\"" + fmt(height_) + "\" viewBox=\"0 0 " + fmt(width_) + ' ' +
                 fmt(height_) + "\">\n";
        body_ += "<rect x=\"0\" y=\"0\" width=\"" + fmt(width_) + "\" height=\"" +
                 fmt(height_) + "\" fill=\"#ffffff\"/>\n";
    }

    double sx(double x) const { return (x - x0_) * scale_; }
    double sy(double y) const { return (y1_ - y) * scale_; }

    void desc(const std::string& text) { body_ += "<desc>" + text + "</desc>\n"; }

    void circle(double x, double y, double r_world, const std::string& style) {
        body_ += "<circle cx=\"" + fmt(sx(x)) + "\" cy=\"" + fmt(sy(y)) + "\" r=\"" +
                 fmt(r_world * scale_) + "\" " + style + "/>\n";
    }

    // Axis-aligned rectangle with lower-left world corner (x, y).
    void rect(double x, double y, double w, double h, const std::string& style) {
        body_ += "<rect x=\"" + fmt(sx(x)) + "\" y=\"" + fmt(sy(y + h)) + "\" width=\"" +
                 fmt(w * scale_) + "\" height=\"" + fmt(h * scale_) + "\" " + style + "/>\n";
    }

    void line(double ax, double ay, double bx, double by, const std::string& style) {
        body_ += "<line x1=\"" + fmt(sx(ax)) + "\" y1=\"" + fmt(sy(ay)) + "\" x2=\"" +
                 fmt(sx(bx)) + "\" y2=\"" + fmt(sy(by)) + "\" " + style + "/>\n";
    }

    void loop(const std::vector<std::pair<double, double>>& pts, const std::string& style) {
        if (pts.empty()) return;
        body_ += "<path d=\"";
        for (std::size_t i = 0; i < pts.size(); ++i) {
            body_ += i == 0 ? 'M' : 'L';
            body_ += fmt(sx(pts[i].first)) + ' ' + fmt(sy(pts[i].second)) + ' ';
        }
        body_ += "Z\" " + style + "/>\n";
    }

    std::string finish() { return body_ + "</svg>\n"; }

private:
    double x0_, y1_, scale_, width_, height_;
    std::string body_;
};

std::string gray_blue(double t) { // 0 -> near white, 1 -> dark blue
    t = std::clamp(t, 0.0, 1.0);
    const int r = static_cast<int>(245.0 - 215.0 * t + 0.5);
    const int g = static_cast<int>(248.0 - 188.0 * t + 0.5);
    const int b = static_cast<int>(252.0 - 122.0 * t + 0.5);
    return "fill=\"rgb(" + std::to_string(r) + ',' + std::to_string(g) + ',' +
           std::to_string(b) + ")\" stroke=\"none\"";
}

} // namespace

std::string covariogram_svg(const CovariogramGrid& grid, const DifferenceBody& body) {
    const double hx = -grid.x0 + grid.step, hy = -grid.y0 + grid.step;
    const double scale = 720.0 / std::max(2.0 * hx, 2.0 * hy);
    Canvas c(-hx, -hy, hx, hy, scale);
    c.desc("covariogram heat map with the difference-body boundary");
    double vmax = 0.0;
    for (double v : grid.values) vmax = std::max(vmax, v);
    if (vmax <= 0.0) vmax = 1.0;
    const auto mx = static_cast<std::int64_t>((grid.nx - 1) / 2);
    const auto my = static_cast<std::int64_t>((grid.ny - 1) / 2);
    for (std::size_t iy = 0; iy < grid.ny; ++iy) {
        for (std::size_t ix = 0; ix < grid.nx; ++ix) {
            const double v = grid.at(ix, iy);
            if (v <= 0.0) continue;
            const double vx = static_cast<double>(static_cast<std::int64_t>(ix) - mx) * grid.step;
            const double vy = static_cast<double>(static_cast<std::int64_t>(iy) - my) * grid.step;
            c.rect(vx - grid.step / 2, vy - grid.step / 2, grid.step, grid.step,
                   gray_blue(v / vmax));
        }
    }
    const std::string bstyle = "fill=\"none\" stroke=\"#333333\" stroke-width=\"2\"";
    for (const std::vector<Cell>& loop : body.boundary_loops) {
        std::vector<std::pair<double, double>> pts;
        pts.reserve(loop.size());
        for (const Cell& v : loop)
            pts.emplace_back(static_cast<double>(v.x), static_cast<double>(v.y));
        c.loop(pts, bstyle);
    }
    return c.finish();
}

std::string patch_svg(const ModelSetPatch& p) {
    const double h = p.radius + 1.0;
    Canvas c(-h, -h, h, h, 720.0 / (2.0 * h));
    c.desc("model-set patch in direct space");
    c.circle(0, 0, p.radius, "fill=\"none\" stroke=\"#cccccc\" stroke-width=\"1\"");
    const std::string dot = "fill=\"#1a1a1a\" stroke=\"none\"";
    const double r = std::max(0.04, std::min(0.18, p.radius / 220.0 + 0.08));
    for (const PatchPoint& pt : p.points) c.circle(pt.x.to_double(), pt.y.to_double(), r, dot);
    return c.finish();
}

std::string difference_svg(const ModelSetPatch& a, const ModelSetPatch& b) {
    const std::vector<PatchPoint> only_a = patch_difference(a, b);
    const std::vector<PatchPoint> only_b = patch_difference(b, a);
    const double h = a.radius + 1.0;
    Canvas c(-h, -h, h, h, 720.0 / (2.0 * h));
    c.desc("patch comparison: large dots shared, open circles second set only, "
           "small dots first set only");
    c.circle(0, 0, a.radius, "fill=\"none\" stroke=\"#cccccc\" stroke-width=\"1\"");

    // Shared points: walk a's points, skipping those only in a.
    std::size_t skip = 0;
    const std::string big = "fill=\"#1a1a1a\" stroke=\"none\"";
    for (const PatchPoint& pt : a.points) {
        if (skip < only_a.size() && only_a[skip].n == pt.n) {
            ++skip;
            continue;
        }
        c.circle(pt.x.to_double(), pt.y.to_double(), 0.26, big);
    }
    const std::string open_ring = "fill=\"none\" stroke=\"#c03030\" stroke-width=\"3\"";
    for (const PatchPoint& pt : only_b)
        c.circle(pt.x.to_double(), pt.y.to_double(), 0.30, open_ring);
    const std::string small = "fill=\"#2050c0\" stroke=\"none\"";
    for (const PatchPoint& pt : only_a)
        c.circle(pt.x.to_double(), pt.y.to_double(), 0.12, small);
    return c.finish();
}

std::string peaks_svg(const PeakList& list) {
    const double h = list.k_max + 0.4;
    Canvas c(-h, -h, h, h, 720.0 / (2.0 * h));
    c.desc("diffraction peaks; disk area proportional to intensity");
    const std::string axis = "stroke=\"#dddddd\" stroke-width=\"1\"";
    c.line(-h, 0, h, 0, axis);
    c.line(0, -h, 0, h, axis);
    double imax = 0.0;
    for (const BraggPeak& p : list.peaks) imax = std::max(imax, p.intensity);
    if (imax <= 0.0) imax = 1.0;
    const double rmax = 0.055 * list.k_max + 0.09;
    const std::string dot = "fill=\"#101010\" stroke=\"none\"";
    for (const BraggPeak& p : list.peaks)
        c.circle(p.kx, p.ky, rmax * std::sqrt(p.intensity / imax), dot);
    return c.finish();
}

} // namespace aperimet::io
