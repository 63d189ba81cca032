#ifndef SEGQUANT_OVERLAP_METRICS_HPP
#define SEGQUANT_OVERLAP_METRICS_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "segquant/label_dictionary.hpp"
#include "segquant/label_map.hpp"

namespace segquant {

/// Row name used for the whole-map record emitted by evaluate_pair.
inline const char* whole_map_name() { return "whole_map"; }

/// Per (subject, structure, method) metric bundle.
struct MetricRecord {
  std::string subject_id;
  std::string structure_name;
  std::string method_name;
  double dice = 0.0;
  double iou = 0.0;
  std::optional<double> hd95_mm; // undefined iff either mask is empty
  double nmi = 0.0;
  double volume_ml = 0.0;
  std::optional<double> fd;
  std::vector<std::string> flags;
};

/// Joint histogram of two labelings over the same grid, background included.
class JointLabelHistogram {
public:
  static JointLabelHistogram from_maps(const LabelMap3D& a, const LabelMap3D& b);
  static JointLabelHistogram from_masks(const BinaryMask& a, const BinaryMask& b);

  std::uint64_t total() const { return total_; }
  const std::map<std::pair<std::int32_t, std::int32_t>, std::uint64_t>& bins() const {
    return bins_;
  }

  /// Natural-log mutual information and marginal entropies.
  double mutual_information() const;
  double entropy_a() const;
  double entropy_b() const;

  /// 2 I(A;B) / (H(A)+H(B)) with the degenerate-case conventions: two constant
  /// inputs score 1.0 when they are the same kind of constant (both background
  /// or both a single nonzero label), 0.0 otherwise; one constant input scores
  /// 0.0.
  double nmi() const;

private:
  std::map<std::pair<std::int32_t, std::int32_t>, std::uint64_t> bins_;
  std::uint64_t total_ = 0;
};

/// 2|A∩B| / (|A|+|B|). Two empty masks score 1.0, one empty scores 0.0.
double dice(const BinaryMask& a, const BinaryMask& b);

/// |A∩B| / |A∪B|, same empty-mask conventions as dice.
double iou(const BinaryMask& a, const BinaryMask& b);

/// Symmetric 95th-percentile boundary distance in mm: for each direction, the
/// 95th percentile (linear interpolation at rank 0.95*(n-1)) of distances from
/// one boundary set to the nearest voxel of the other; the result is the max
/// of the two directions. Throws EmptyMaskError when either mask is empty.
double hd95(const BinaryMask& a, const BinaryMask& b,
            Connectivity connectivity = Connectivity::face6);

/// NMI of the 2x2 joint histogram of two masks over the full grid.
double nmi_binary(const BinaryMask& a, const BinaryMask& b);

/// NMI of the full joint label histogram of two maps, background included.
double nmi_multiclass(const LabelMap3D& a, const LabelMap3D& b);

/// Which metrics evaluate_pair computes (hd95 dominates the cost).
struct MetricSelection {
  bool dice = true;
  bool iou = true;
  bool hd95 = true;
  bool nmi = true;
};

/// One record per dictionary structure (binary metrics of that label's masks,
/// volume of the candidate mask) plus a whole-map record carrying
/// nmi_multiclass and nonzero-vs-nonzero dice/iou/hd95. Structures empty in
/// either map get the empty-mask conventions and a flag. Candidate labels
/// missing from the dictionary are flagged on the whole-map record, not fatal.
std::vector<MetricRecord> evaluate_pair(const LabelMap3D& ref, const LabelMap3D& cand,
                                        const LabelDictionary& dict,
                                        Connectivity connectivity = Connectivity::face6,
                                        const MetricSelection& select = {});

} // namespace segquant

#endif
