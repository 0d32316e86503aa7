// CSV emitters. All floats print with 17 significant digits ('%.17g', '.'
// decimal separator, no locale), so files are byte-deterministic and
// round-trip through a generic reader without loss.
#ifndef APERIMET_IO_CSV_HPP
#define APERIMET_IO_CSV_HPP

#include <string>
#include <vector>

#include "aperimet/autocorr.hpp"
#include "aperimet/covariogram.hpp"
#include "aperimet/cut_project.hpp"
#include "aperimet/diffraction.hpp"

namespace aperimet::io {

std::string format_double(double v);

// Header "vx,vy,g"; rows in row-major grid order.
std::string grid_csv(const CovariogramGrid& g);

// Header "n1,n2,n3,n4,x,y,xstar,ystar"; one row per patch point.
std::string patch_csv(const ModelSetPatch& p);

struct AutocorrRow {
    LatticeVector n;
    double dx = 0, dy = 0;  // direct coordinates of the difference
    double eta = 0;         // exact coefficient, float view
    double empirical = 0;   // finite-patch estimate
};
// Header "n1,n2,n3,n4,dx,dy,eta,empirical".
std::string autocorr_csv(const std::vector<AutocorrRow>& rows);

// Header "n1,n2,n3,n4,kx,ky,intensity".
std::string peaks_csv(const PeakList& list);

void write_text(const std::string& path, const std::string& content);

} // namespace aperimet::io

#endif
