#include "segquant/label_map.hpp"

#include <algorithm>

namespace segquant {

namespace {

void check_geometry(const GridDims& dims, const Spacing& spacing, std::size_t n_voxels) {
  if (dims[0] <= 0 || dims[1] <= 0 || dims[2] <= 0)
    throw Error("grid dims must be positive");
  if (spacing[0] <= 0 || spacing[1] <= 0 || spacing[2] <= 0)
    throw Error("voxel spacing must be positive");
  if (grid_size(dims) != n_voxels)
    throw Error("voxel array length does not match dims");
}

std::vector<std::array<int, 3>> build_offsets(Connectivity c) {
  std::vector<std::array<int, 3>> out;
  if (c == Connectivity::face6) {
    out = {{{-1, 0, 0}}, {{1, 0, 0}}, {{0, -1, 0}}, {{0, 1, 0}}, {{0, 0, -1}}, {{0, 0, 1}}};
  } else {
    for (int dz = -1; dz <= 1; ++dz)
      for (int dy = -1; dy <= 1; ++dy)
        for (int dx = -1; dx <= 1; ++dx)
          if (dx || dy || dz) out.push_back({dx, dy, dz});
  }
  return out;
}

} // namespace

const std::vector<std::array<int, 3>>& neighbor_offsets(Connectivity c) {
  static const std::vector<std::array<int, 3>> face = build_offsets(Connectivity::face6);
  static const std::vector<std::array<int, 3>> full = build_offsets(Connectivity::full26);
  return c == Connectivity::face6 ? face : full;
}

LabelMap3D::LabelMap3D(GridDims dims, Spacing spacing, std::vector<std::int32_t> labels,
                       std::string provenance)
    : dims_(dims), spacing_(spacing), labels_(std::move(labels)),
      provenance_(std::move(provenance)) {
  check_geometry(dims_, spacing_, labels_.size());
  for (std::int32_t v : labels_)
    if (v < 0) throw Error("labels must be non-negative");
}

std::vector<std::int32_t> LabelMap3D::nonzero_labels() const {
  std::vector<std::int32_t> out(labels_.begin(), labels_.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  if (!out.empty() && out.front() == 0) out.erase(out.begin());
  return out;
}

BinaryMask::BinaryMask(GridDims dims, Spacing spacing, std::vector<std::uint8_t> bits,
                       std::vector<std::int32_t> source_labels)
    : dims_(dims), spacing_(spacing), bits_(std::move(bits)),
      source_labels_(std::move(source_labels)) {
  check_geometry(dims_, spacing_, bits_.size());
  for (std::uint8_t b : bits_) voxel_count_ += (b != 0);
}

BinaryMask extract_mask(const LabelMap3D& map, const std::set<std::int32_t>& label_ids) {
  if (label_ids.empty()) throw Error("extract_mask: empty label set");
  if (label_ids.count(0)) throw Error("extract_mask: background label 0 not allowed");
  std::vector<std::uint8_t> bits(map.size(), 0);
  const auto& labels = map.labels();
  for (std::size_t i = 0; i < labels.size(); ++i)
    bits[i] = label_ids.count(labels[i]) ? 1 : 0;
  return BinaryMask(map.dims(), map.spacing(), std::move(bits),
                    std::vector<std::int32_t>(label_ids.begin(), label_ids.end()));
}

LabelMap3D subtract_labels(const LabelMap3D& map, const std::set<std::int32_t>& remove_ids) {
  if (remove_ids.count(0)) throw Error("subtract_labels: background label 0 not allowed");
  std::vector<std::int32_t> labels = map.labels();
  for (auto& v : labels)
    if (remove_ids.count(v)) v = 0;
  return LabelMap3D(map.dims(), map.spacing(), std::move(labels), map.provenance());
}

BoundarySet boundary_voxels(const BinaryMask& mask, Connectivity connectivity) {
  BoundarySet out{mask.dims(), mask.spacing(), {}};
  const auto& offs = neighbor_offsets(connectivity);
  const auto& d = mask.dims();
  for (int z = 0; z < d[2]; ++z)
    for (int y = 0; y < d[1]; ++y)
      for (int x = 0; x < d[0]; ++x) {
        if (!mask.test(x, y, z)) continue;
        for (const auto& o : offs) {
          if (!mask.test_or_false(x + o[0], y + o[1], z + o[2])) {
            out.voxels.push_back({x, y, z});
            break;
          }
        }
      }
  return out;
}

BinaryMask boundary_mask(const BinaryMask& mask, Connectivity connectivity) {
  std::vector<std::uint8_t> bits(mask.size(), 0);
  const auto& offs = neighbor_offsets(connectivity);
  const auto& d = mask.dims();
  for (int z = 0; z < d[2]; ++z)
    for (int y = 0; y < d[1]; ++y)
      for (int x = 0; x < d[0]; ++x) {
        if (!mask.test(x, y, z)) continue;
        for (const auto& o : offs) {
          if (!mask.test_or_false(x + o[0], y + o[1], z + o[2])) {
            bits[linear_index(d, x, y, z)] = 1;
            break;
          }
        }
      }
  return BinaryMask(mask.dims(), mask.spacing(), std::move(bits), mask.source_labels());
}

} // namespace segquant
