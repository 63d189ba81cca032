#include "segquant/label_dictionary.hpp"

#include <fstream>
#include <map>
#include <unordered_map>
#include <unordered_set>

#include <json.hpp>

namespace segquant {

std::string to_string(Hemisphere h) {
  switch (h) {
    case Hemisphere::left: return "left";
    case Hemisphere::right: return "right";
    default: return "midline";
  }
}

Hemisphere hemisphere_from_string(const std::string& s) {
  if (s == "left") return Hemisphere::left;
  if (s == "right") return Hemisphere::right;
  if (s == "midline") return Hemisphere::midline;
  throw Error("unknown hemisphere: " + s);
}

LabelDictionary::LabelDictionary(std::vector<LabelEntry> entries)
    : entries_(std::move(entries)) {
  std::unordered_map<std::int32_t, const LabelEntry*> by_id;
  for (const auto& e : entries_) {
    if (e.label_id <= 0) throw Error("label ids must be positive");
    if (!by_id.emplace(e.label_id, &e).second)
      throw Error("duplicate label id " + std::to_string(e.label_id));
  }
  for (const auto& e : entries_) {
    if (!e.pool_partner) continue;
    auto it = by_id.find(*e.pool_partner);
    if (it == by_id.end())
      throw Error("pool partner " + std::to_string(*e.pool_partner) + " of label " +
                  std::to_string(e.label_id) + " is not in the dictionary");
    const LabelEntry& p = *it->second;
    if (!p.pool_partner || *p.pool_partner != e.label_id)
      throw Error("pool partners must be symmetric (label " + std::to_string(e.label_id) + ")");
    const bool crosses = (e.hemisphere == Hemisphere::left && p.hemisphere == Hemisphere::right) ||
                         (e.hemisphere == Hemisphere::right && p.hemisphere == Hemisphere::left);
    if (!crosses)
      throw Error("pool partners must cross hemispheres (label " + std::to_string(e.label_id) + ")");
  }
}

const LabelEntry* LabelDictionary::find(std::int32_t label_id) const {
  for (const auto& e : entries_)
    if (e.label_id == label_id) return &e;
  return nullptr;
}

std::vector<std::int32_t> LabelDictionary::uncovered_labels(const LabelMap3D& map) const {
  std::unordered_set<std::int32_t> known;
  for (const auto& e : entries_) known.insert(e.label_id);
  std::vector<std::int32_t> out;
  for (std::int32_t v : map.nonzero_labels())
    if (!known.count(v)) out.push_back(v);
  return out;
}

LabelDictionary LabelDictionary::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoFailureError("cannot open label dictionary: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw Error("label dictionary parse error in " + path + ": " + e.what());
  }
  if (!j.is_array()) throw Error("label dictionary must be a JSON array: " + path);
  std::vector<LabelEntry> entries;
  for (const auto& item : j) {
    LabelEntry e;
    e.label_id = item.at("label_id").get<std::int32_t>();
    e.name = item.at("name").get<std::string>();
    e.hemisphere = hemisphere_from_string(item.at("hemisphere").get<std::string>());
    if (item.contains("pool_partner") && !item["pool_partner"].is_null())
      e.pool_partner = item["pool_partner"].get<std::int32_t>();
    entries.push_back(std::move(e));
  }
  return LabelDictionary(std::move(entries));
}

void LabelDictionary::save(const std::string& path) const {
  nlohmann::ordered_json j = nlohmann::ordered_json::array();
  for (const auto& e : entries_) {
    nlohmann::ordered_json item;
    item["label_id"] = e.label_id;
    item["name"] = e.name;
    item["hemisphere"] = to_string(e.hemisphere);
    if (e.pool_partner) item["pool_partner"] = *e.pool_partner;
    j.push_back(std::move(item));
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoFailureError("cannot write label dictionary: " + path);
  out << j.dump(2) << "\n";
}

std::pair<LabelMap3D, LabelDictionary>
pool_hemispheres(const LabelMap3D& map, const LabelDictionary& dict) {
  auto uncovered = dict.uncovered_labels(map);
  if (!uncovered.empty())
    throw UncoveredLabelError("pool_hemispheres: label " + std::to_string(uncovered.front()) +
                              " not covered by the dictionary");

  std::map<std::int32_t, std::int32_t> rewrite; // right id -> left partner id
  std::vector<LabelEntry> merged;
  for (const auto& e : dict.entries()) {
    if (e.pool_partner && e.hemisphere == Hemisphere::right) {
      rewrite[e.label_id] = *e.pool_partner;
      continue; // absorbed into the left entry
    }
    LabelEntry out = e;
    if (e.pool_partner && e.hemisphere == Hemisphere::left) {
      out.hemisphere = Hemisphere::midline; // now covers both sides
      out.pool_partner.reset();
    }
    merged.push_back(std::move(out));
  }

  std::vector<std::int32_t> labels = map.labels();
  for (auto& v : labels) {
    auto it = rewrite.find(v);
    if (it != rewrite.end()) v = it->second;
  }
  return {LabelMap3D(map.dims(), map.spacing(), std::move(labels), map.provenance()),
          LabelDictionary(std::move(merged))};
}

} // namespace segquant
