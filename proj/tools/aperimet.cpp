// Command-line front end. Each subcommand maps onto one library pipeline and
// writes fixed-name artifacts under --out.
#include <string>

#include "CLI11.hpp"
#include "aperimet/io/runner.hpp"

int main(int argc, char** argv) {
    using Cmd = aperimet::io::RunConfig::Command;
    aperimet::io::RunConfig cfg;

    CLI::App app{"octagonal cut-and-project model sets: covariograms, patches, "
                 "autocorrelation, diffraction, and homometric window search"};
    app.require_subcommand(1);

    const auto add_out = [&](CLI::App* s) {
        s->add_option("--out", cfg.out_dir, "output directory (default: out)");
    };
    const auto add_window = [&](CLI::App* s) {
        s->add_option("--window", cfg.window_path, "window file")->required();
    };

    CLI::App* cov = app.add_subcommand("covariogram",
                                       "sample the window covariogram on a grid");
    add_window(cov);
    cov->add_option("--step", cfg.step, "grid step, exact rational or decimal (default 1/4)");
    add_out(cov);

    CLI::App* patch = app.add_subcommand("patch", "generate a circular model-set patch");
    add_window(patch);
    patch->add_option("--radius", cfg.radius, "patch radius (default 20)");
    add_out(patch);

    CLI::App* ac = app.add_subcommand("autocorr",
                                      "exact and empirical autocorrelation of a patch");
    add_window(ac);
    ac->add_option("--radius", cfg.radius, "patch radius (default 20)");
    ac->add_option("--max-offset", cfg.max_offset,
                   "difference box half-width; negative keeps all pairs (default 8)");
    add_out(ac);

    CLI::App* dif = app.add_subcommand("diffract", "enumerate Bragg peaks");
    add_window(dif);
    dif->add_option("--kmax", cfg.k_max, "peak radius cutoff (default 3)");
    dif->add_option("--imin", cfg.intensity_min, "intensity threshold (default 1e-3)");
    add_out(dif);

    CLI::App* hom = app.add_subcommand("homometry",
                                       "compare two windows and plot patch differences");
    add_window(hom);
    hom->add_option("--window2", cfg.window2_path, "second window file")->required();
    hom->add_option("--radius", cfg.radius, "patch radius (default 20)");
    add_out(hom);

    CLI::App* sea = app.add_subcommand("search", "brute-force homometric pair search");
    sea->add_option("--ncells", cfg.n_cells, "polyomino cell count (default 4)");
    sea->add_option("--box-w", cfg.box_w, "bounding box width (default: unrestricted)");
    sea->add_option("--box-h", cfg.box_h, "bounding box height (default: unrestricted)");
    sea->add_flag("--minkowski", cfg.minkowski,
                  "search Minkowski-decomposable candidates (factors --nu, --nv)");
    sea->add_option("--nu", cfg.nu, "first factor point count (default 3)");
    sea->add_option("--nv", cfg.nv, "second factor point count (default 5)");
    sea->add_flag("--one-d", cfg.one_d, "search 1D integer sets instead of polyominoes");
    sea->add_option("--points", cfg.points_1d, "1D set size (default 6)");
    sea->add_option("--span", cfg.span_1d, "1D span, sets contain 0 and span (default 11)");
    add_out(sea);

    CLI::App* rec = app.add_subcommand("reconstruct",
                                       "rebuild the reference homometric window pair");
    add_out(rec);

    CLI11_PARSE(app, argc, argv);

    if (cov->parsed()) cfg.command = Cmd::covariogram;
    else if (patch->parsed()) cfg.command = Cmd::patch;
    else if (ac->parsed()) cfg.command = Cmd::autocorr;
    else if (dif->parsed()) cfg.command = Cmd::diffract;
    else if (hom->parsed()) cfg.command = Cmd::homometry;
    else if (sea->parsed()) cfg.command = Cmd::search;
    else cfg.command = Cmd::reconstruct;

    return aperimet::io::run(cfg);
}
