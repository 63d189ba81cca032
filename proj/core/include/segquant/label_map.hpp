#ifndef SEGQUANT_LABEL_MAP_HPP
#define SEGQUANT_LABEL_MAP_HPP

#include <array>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "segquant/errors.hpp"

namespace segquant {

/// Voxel counts per axis. Linear storage is x-fastest:
/// index = x + dims[0] * (y + dims[1] * z).
using GridDims = std::array<int, 3>;

/// Physical voxel size in mm per axis.
using Spacing = std::array<double, 3>;

enum class Connectivity { face6, full26 };

inline std::size_t grid_size(const GridDims& d) {
  return static_cast<std::size_t>(d[0]) * static_cast<std::size_t>(d[1]) *
         static_cast<std::size_t>(d[2]);
}

inline std::size_t linear_index(const GridDims& d, int x, int y, int z) {
  return static_cast<std::size_t>(x) +
         static_cast<std::size_t>(d[0]) *
             (static_cast<std::size_t>(y) +
              static_cast<std::size_t>(d[1]) * static_cast<std::size_t>(z));
}

/// Integer-labeled voxel grid with physical spacing. Label 0 is background.
/// Immutable after construction.
class LabelMap3D {
public:
  LabelMap3D(GridDims dims, Spacing spacing, std::vector<std::int32_t> labels,
             std::string provenance = {});

  const GridDims& dims() const { return dims_; }
  const Spacing& spacing() const { return spacing_; }
  const std::vector<std::int32_t>& labels() const { return labels_; }
  const std::string& provenance() const { return provenance_; }

  std::size_t size() const { return labels_.size(); }
  std::int32_t at(int x, int y, int z) const {
    return labels_[linear_index(dims_, x, y, z)];
  }

  /// Sorted distinct nonzero labels present in the map.
  std::vector<std::int32_t> nonzero_labels() const;

  bool same_grid(const LabelMap3D& other) const {
    return dims_ == other.dims_ && spacing_ == other.spacing_;
  }

private:
  GridDims dims_;
  Spacing spacing_;
  std::vector<std::int32_t> labels_;
  std::string provenance_;
};

/// Single-structure binary extraction of a label map. Grid geometry is copied
/// verbatim from the parent; the true-voxel count is cached at construction.
class BinaryMask {
public:
  BinaryMask(GridDims dims, Spacing spacing, std::vector<std::uint8_t> bits,
             std::vector<std::int32_t> source_labels = {});

  const GridDims& dims() const { return dims_; }
  const Spacing& spacing() const { return spacing_; }
  const std::vector<std::uint8_t>& bits() const { return bits_; }
  const std::vector<std::int32_t>& source_labels() const { return source_labels_; }

  std::size_t size() const { return bits_.size(); }
  std::uint64_t voxel_count() const { return voxel_count_; }
  bool empty() const { return voxel_count_ == 0; }

  bool test(int x, int y, int z) const {
    return bits_[linear_index(dims_, x, y, z)] != 0;
  }
  bool test_or_false(int x, int y, int z) const {
    if (x < 0 || y < 0 || z < 0 || x >= dims_[0] || y >= dims_[1] || z >= dims_[2])
      return false;
    return test(x, y, z);
  }

  bool same_grid(const BinaryMask& other) const {
    return dims_ == other.dims_ && spacing_ == other.spacing_;
  }

private:
  GridDims dims_;
  Spacing spacing_;
  std::vector<std::uint8_t> bits_;
  std::vector<std::int32_t> source_labels_;
  std::uint64_t voxel_count_ = 0;
};

/// Voxels of a mask that touch background under a given connectivity.
struct BoundarySet {
  GridDims dims;
  Spacing spacing;
  std::vector<std::array<int, 3>> voxels;
};

/// Neighbor offsets for a connectivity (6 face or 26 full neighbors).
const std::vector<std::array<int, 3>>& neighbor_offsets(Connectivity c);

/// Mask of the voxels whose label is in `label_ids` (ids absent from the map
/// simply contribute nothing). Requires non-empty ids, none of them 0.
BinaryMask extract_mask(const LabelMap3D& map, const std::set<std::int32_t>& label_ids);

/// Voxel-wise subtraction: labels in `remove_ids` become background.
LabelMap3D subtract_labels(const LabelMap3D& map, const std::set<std::int32_t>& remove_ids);

/// True voxels of `mask` with at least one false neighbor (out-of-grid counts
/// as false).
BoundarySet boundary_voxels(const BinaryMask& mask, Connectivity connectivity);

/// Same boundary as boundary_voxels, materialized as a mask.
BinaryMask boundary_mask(const BinaryMask& mask, Connectivity connectivity);

} // namespace segquant

#endif
