// Command runner: executes one configured command and writes fixed-name,
// byte-deterministic output files under the output directory.
#ifndef APERIMET_IO_RUNNER_HPP
#define APERIMET_IO_RUNNER_HPP

#include <cstdint>
#include <string>

#include "aperimet/rational.hpp"

namespace aperimet::io {

inline constexpr const char* kToolName = "aperimet";
inline constexpr const char* kToolVersion = "1.0.0";

struct RunConfig {
    enum class Command {
        covariogram,
        patch,
        autocorr,
        diffract,
        homometry,
        search,
        reconstruct
    };
    Command command = Command::covariogram;

    std::string window_path;  // primary window file
    std::string window2_path; // comparison window (homometry)
    std::string out_dir = "out";

    std::string step = "1/4";    // covariogram grid step, exact token
    double radius = 20.0;        // patch radius
    double k_max = 3.0;          // diffraction cutoffs
    double intensity_min = 1e-3;
    double max_offset = 8.0;     // autocorr difference box; < 0 keeps all pairs

    // search parameters
    bool one_d = false;     // 1D integer-set search
    bool minkowski = false; // Minkowski-decomposable polyomino search
    int n_cells = 4;
    int box_w = 0, box_h = 0; // < 1 means the per-mode default
    int nu = 3, nv = 5;
    int points_1d = 6;
    std::int64_t span_1d = 11;
};

// Returns 0 on success, 1 on any reported failure (message on stderr).
int run(const RunConfig& c);

// Exact rational from a CLI token: "p/q", a bare integer, or a plain
// decimal such as "0.25" (converted exactly).
Rational parse_rational_arg(const std::string& tok);

} // namespace aperimet::io

#endif
