// SVG figure emitters: resolution-independent, diffable, no imaging
// dependency. All coordinates print with '%.6g', so output is
// byte-deterministic for identical inputs.
#ifndef APERIMET_IO_SVG_HPP
#define APERIMET_IO_SVG_HPP

#include <string>

#include "aperimet/covariogram.hpp"
#include "aperimet/cut_project.hpp"
#include "aperimet/diffraction.hpp"

namespace aperimet::io {

// Heat map of the covariogram samples with the difference-body boundary
// loops drawn on top.
std::string covariogram_svg(const CovariogramGrid& grid, const DifferenceBody& body);

// Dot plot of a model-set patch in direct space.
std::string patch_svg(const ModelSetPatch& p);

// Comparison plot of two equal-radius patches: shared points as large dots,
// points only in b as open circles, points only in a as small dots.
std::string difference_svg(const ModelSetPatch& a, const ModelSetPatch& b);

// Diffraction pattern: one disk per peak with area proportional to its
// intensity.
std::string peaks_svg(const PeakList& list);

} // namespace aperimet::io

#endif
