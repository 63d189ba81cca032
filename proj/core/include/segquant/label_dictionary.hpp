#ifndef SEGQUANT_LABEL_DICTIONARY_HPP
#define SEGQUANT_LABEL_DICTIONARY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "segquant/label_map.hpp"

namespace segquant {

enum class Hemisphere { left, right, midline };

std::string to_string(Hemisphere h);
Hemisphere hemisphere_from_string(const std::string& s);

struct LabelEntry {
  std::int32_t label_id = 0;
  std::string name;
  Hemisphere hemisphere = Hemisphere::midline;
  std::optional<std::int32_t> pool_partner;
};

/// The structure list of a labeling convention: which integer ids exist, what
/// they are called, and how left/right counterparts pair up. Loaded from a
/// JSON file so any convention can be used; nothing is hardcoded.
class LabelDictionary {
public:
  explicit LabelDictionary(std::vector<LabelEntry> entries);

  static LabelDictionary load(const std::string& path);
  void save(const std::string& path) const;

  const std::vector<LabelEntry>& entries() const { return entries_; }
  const LabelEntry* find(std::int32_t label_id) const;

  /// Nonzero labels of `map` that have no dictionary entry.
  std::vector<std::int32_t> uncovered_labels(const LabelMap3D& map) const;

private:
  std::vector<LabelEntry> entries_;
};

/// Rewrites every right-hemisphere label that has a pool partner to the
/// partner's id. The returned dictionary keeps only the merged and midline
/// entries (merged entries take the left partner's id and name and are marked
/// midline). Labels present in the map but not in the dictionary raise
/// UncoveredLabelError.
std::pair<LabelMap3D, LabelDictionary>
pool_hemispheres(const LabelMap3D& map, const LabelDictionary& dict);

} // namespace segquant

#endif
