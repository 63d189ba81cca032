#ifndef SEGQUANT_DISTANCE_TRANSFORM_HPP
#define SEGQUANT_DISTANCE_TRANSFORM_HPP

#include <vector>

#include "segquant/label_map.hpp"

namespace segquant {

/// Exact Euclidean distance (mm) from every voxel to the nearest true voxel of
/// `mask`, honoring anisotropic spacing. Separable squared-distance transform:
/// one 1-D lower-envelope pass per axis, each in that axis's physical
/// coordinates. Throws EmptyMaskError when the mask has no true voxel.
std::vector<double> distance_transform(const BinaryMask& mask);

/// Squared-distance variant (mm^2); same algorithm without the final sqrt.
std::vector<double> squared_distance_transform(const BinaryMask& mask);

} // namespace segquant

#endif
