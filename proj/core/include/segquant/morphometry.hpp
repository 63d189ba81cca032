#ifndef SEGQUANT_MORPHOMETRY_HPP
#define SEGQUANT_MORPHOMETRY_HPP

#include <cstdint>
#include <vector>

#include "segquant/label_map.hpp"

namespace segquant {

/// Box edge sizes (voxels) vs occupied-box counts, minimized over grid offsets.
struct BoxCountSeries {
  std::vector<int> scales;            // strictly increasing
  std::vector<std::uint64_t> counts;  // N(s), strictly positive
  std::vector<int> offsets_tried;     // per scale
};

/// Log-log fit of a BoxCountSeries over the selected scaling window.
struct FDFit {
  double fd = 0.0;        // slope of log N vs log(1/s)
  double intercept = 0.0;
  double r_squared = 1.0;
  int window_first = 0;   // index into the series' scales
  int window_last = 0;
  int n_scales_used = 0;
  bool degenerate = false;   // all counts equal; slope 0 by convention
  bool anisotropic = false;  // spacing max/min > 1.05; fd computed in voxel space
};

enum class OffsetPolicy {
  /// Minimize N(s) over grid offsets: all s^3 offsets for s <= 4, the 27-point
  /// {0, s/3, 2s/3}^3 lattice above that.
  minimize,
  /// Single zero offset.
  origin,
};

/// voxel_count * spacing product / 1000 (mm^3 -> mL).
double volume_ml(const BinaryMask& mask);

/// Occupied-box counts for each scale. Boxes are grid-aligned, shifted by the
/// offset, clipped at the edges; a clipped box counts if it contains a true
/// voxel. Scales must be strictly increasing positive integers <= min(dims).
BoxCountSeries box_count(const BinaryMask& mask, const std::vector<int>& scales,
                         OffsetPolicy policy = OffsetPolicy::minimize);

/// OLS of log N against log(1/s) over contiguous scale windows of length
/// >= max(3, ceil(2k/3)), picking the window with the highest r^2; r^2 values
/// within 1e-12 tie and resolve to the wider window, then the smaller first
/// index. An all-equal-counts series is degenerate: slope 0, r^2 1, flagged.
FDFit fd_fit(const BoxCountSeries& series);

/// Power ladder used by fractal_dimension: powers of the smallest prime factor
/// of min(dims) when that factor is 2 or 3 (exact tilings for dyadic and
/// triadic grids), powers of two otherwise.
std::vector<int> default_scales(const GridDims& dims);

/// box_count over the default ladder with offset minimization, then fd_fit.
/// Requires >= 8 true voxels and a ladder of >= 3 scales.
FDFit fractal_dimension(const BinaryMask& mask);

} // namespace segquant

#endif
