#ifndef SEGQUANT_RAW_IO_HPP
#define SEGQUANT_RAW_IO_HPP

#include <string>

#include "segquant/label_map.hpp"

namespace segquant {

// Deterministic fixture format: <name>.raw (x-fastest little-endian voxel
// data) plus a JSON sidecar declaring dims, spacing_mm, dtype and order.
// Accepted dtypes: u8, u16, i16, i32.

LabelMap3D load_raw(const std::string& raw_path, const std::string& sidecar_path);

/// Writes the map with the smallest dtype that holds its labels; round-trips
/// byte-identically through load_raw.
void save_raw(const LabelMap3D& map, const std::string& raw_path,
              const std::string& sidecar_path);

} // namespace segquant

#endif
