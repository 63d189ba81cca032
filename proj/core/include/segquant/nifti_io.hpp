#ifndef SEGQUANT_NIFTI_IO_HPP
#define SEGQUANT_NIFTI_IO_HPP

#include <string>

#include "segquant/label_map.hpp"

namespace segquant {

// NIfTI-1 subset: single-file .nii with the 348-byte header and magic "n+1\0";
// datatypes uint8(2), int16(4), int32(8), float32(16), uint16(512); optional
// gzip compression detected by the 1F 8B magic. Float voxels are accepted only
// when every value is integral within 1e-6. scl_slope outside {0,1} or a
// nonzero scl_inter is rejected (labels must not be rescaled). Orientation
// matrices are ignored: metrics only ever compare maps on a shared grid.

LabelMap3D load_nifti(const std::string& path);

/// Writes a .nii (gzip-compressed when the filename ends in .gz) using int32
/// voxels, or uint8/uint16 when the label range allows.
void save_nifti(const LabelMap3D& map, const std::string& path);

} // namespace segquant

#endif
