#ifndef SEGQUANT_PHANTOM_HPP
#define SEGQUANT_PHANTOM_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "segquant/label_map.hpp"

namespace segquant {

/// SplitMix64: the fixture generator. Named and widely specified so ports can
/// reproduce perturbed masks bit-exactly.
class SplitMix64 {
public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next_u64();
  /// Uniform double in [0, 1): top 53 bits of next_u64.
  double next_double();

private:
  std::uint64_t state_;
};

struct PerturbationSpec {
  enum class Kind { dilate, erode, boundary_flip };
  Kind kind = Kind::dilate;
  int iterations = 0;      // dilate / erode only
  double flip_rate = 0.0;  // boundary_flip only, in [0,1]
  std::uint64_t seed = 0;  // boundary_flip only
  Connectivity connectivity = Connectivity::face6;

  std::string describe() const;
};

// Deterministic analytic fixtures, centered on n^3 grids with 1 mm spacing.
// n >= 8 throughout (GridTooSmallError otherwise).
BinaryMask make_cube(int n);                      // filled n^3 grid
BinaryMask make_plane(int n);                     // one-voxel-thick n x n plane
BinaryMask make_line(int n);                      // n voxels along x
BinaryMask make_sphere(int n, double radius_voxels);

/// Standard Menger sponge at construction level 1..4 on a 3^level grid;
/// 20^level voxels.
BinaryMask make_menger(int level);

/// Centers a mask's content in a larger n^3 grid (margin for perturbations).
BinaryMask embed(const BinaryMask& mask, int n);

struct PerturbResult {
  BinaryMask mask;
  bool emptied = false; // erosion removed every voxel
};

/// dilate/erode: iterated morphological operation with the connectivity's
/// structuring element, clipped at the grid. boundary_flip: every boundary
/// voxel and its false face-neighbors flips independently with probability
/// flip_rate, visited in ascending linear-index order under a SplitMix64
/// stream seeded from the spec. Identical (mask, spec) gives identical output.
PerturbResult perturb(const BinaryMask& mask, const PerturbationSpec& spec);

struct PropagationRow {
  std::string structure;
  std::string perturbation;
  double delta_volume_ml = 0.0;
  double delta_fd = 0.0;
};

/// Signed volume and FD differences (perturbed - base) for every base x spec
/// combination; morphometry failures propagate.
std::vector<PropagationRow>
propagation_experiment(const std::vector<std::pair<std::string, BinaryMask>>& base_masks,
                       const std::vector<PerturbationSpec>& schedule);

/// The frozen default experiment: sphere r=13 in 44^3, 13^3 cube in 34^3 and a
/// level-3 Menger sponge in 41^3, under erode x1, dilate x1..3 and boundary
/// flips at rates 0.15/0.35 with seeds 11/12 (face6 everywhere).
std::vector<std::pair<std::string, BinaryMask>> default_propagation_bases();
std::vector<PerturbationSpec> default_propagation_schedule();

} // namespace segquant

#endif
