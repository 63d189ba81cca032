#include "segquant/raw_io.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <vector>

#include <json.hpp>

namespace segquant {

namespace {

struct Dtype {
  std::string name;
  int size;
};

Dtype dtype_from_name(const std::string& s) {
  if (s == "u8") return {"u8", 1};
  if (s == "u16") return {"u16", 2};
  if (s == "i16") return {"i16", 2};
  if (s == "i32") return {"i32", 4};
  throw SidecarInvalidError("unknown dtype: " + s);
}

std::vector<std::uint8_t> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoFailureError("cannot open: " + path);
  return std::vector<std::uint8_t>((std::istreambuf_iterator<char>(in)),
                                   std::istreambuf_iterator<char>());
}

} // namespace

LabelMap3D load_raw(const std::string& raw_path, const std::string& sidecar_path) {
  std::ifstream side(sidecar_path);
  if (!side) throw IoFailureError("cannot open sidecar: " + sidecar_path);
  nlohmann::json j;
  try {
    side >> j;
  } catch (const nlohmann::json::exception& e) {
    throw SidecarInvalidError("sidecar parse error: " + std::string(e.what()));
  }

  GridDims dims;
  Spacing spacing;
  Dtype dtype{"", 0};
  try {
    auto jd = j.at("dims");
    auto js = j.at("spacing_mm");
    if (!jd.is_array() || jd.size() != 3 || !js.is_array() || js.size() != 3)
      throw SidecarInvalidError("dims and spacing_mm must have 3 entries");
    for (int k = 0; k < 3; ++k) {
      dims[k] = jd[k].get<int>();
      spacing[k] = js[k].get<double>();
    }
    dtype = dtype_from_name(j.at("dtype").get<std::string>());
    if (j.at("order").get<std::string>() != "x-fastest little-endian")
      throw SidecarInvalidError("unsupported order: " + j["order"].get<std::string>());
  } catch (const nlohmann::json::exception& e) {
    throw SidecarInvalidError("sidecar missing or invalid key: " + std::string(e.what()));
  }
  if (dims[0] <= 0 || dims[1] <= 0 || dims[2] <= 0)
    throw SidecarInvalidError("dims must be positive");
  if (spacing[0] <= 0 || spacing[1] <= 0 || spacing[2] <= 0)
    throw SidecarInvalidError("spacing_mm must be positive");

  const std::size_t n = grid_size(dims);
  const auto bytes = read_file(raw_path);
  if (bytes.size() != n * static_cast<std::size_t>(dtype.size))
    throw LengthMismatchError("raw file holds " + std::to_string(bytes.size()) +
                              " bytes, expected " + std::to_string(n * dtype.size));

  std::vector<std::int32_t> labels(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint8_t* p = bytes.data() + i * dtype.size;
    std::int64_t v = 0;
    if (dtype.name == "u8") v = p[0];
    else if (dtype.name == "u16") v = static_cast<std::int64_t>(p[0]) | (static_cast<std::int64_t>(p[1]) << 8);
    else if (dtype.name == "i16") v = static_cast<std::int16_t>(p[0] | (p[1] << 8));
    else v = static_cast<std::int32_t>(static_cast<std::uint32_t>(p[0]) |
                                       (static_cast<std::uint32_t>(p[1]) << 8) |
                                       (static_cast<std::uint32_t>(p[2]) << 16) |
                                       (static_cast<std::uint32_t>(p[3]) << 24));
    if (v < 0) throw NonIntegralLabelsError("negative label value in " + raw_path);
    labels[i] = static_cast<std::int32_t>(v);
  }
  return LabelMap3D(dims, spacing, std::move(labels), raw_path);
}

void save_raw(const LabelMap3D& map, const std::string& raw_path,
              const std::string& sidecar_path) {
  const auto& labels = map.labels();
  std::int32_t max_label = 0;
  for (auto v : labels) max_label = std::max(max_label, v);
  const std::string dtype = max_label <= 255 ? "u8" : (max_label <= 65535 ? "u16" : "i32");
  const int size = dtype == "u8" ? 1 : (dtype == "u16" ? 2 : 4);

  std::vector<std::uint8_t> bytes(labels.size() * size);
  for (std::size_t i = 0; i < labels.size(); ++i) {
    std::uint32_t v = static_cast<std::uint32_t>(labels[i]);
    for (int b = 0; b < size; ++b) bytes[i * size + b] = (v >> (8 * b)) & 0xFF;
  }
  std::ofstream out(raw_path, std::ios::binary);
  if (!out) throw IoFailureError("cannot write: " + raw_path);
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));

  nlohmann::ordered_json j;
  j["dims"] = {map.dims()[0], map.dims()[1], map.dims()[2]};
  j["spacing_mm"] = {map.spacing()[0], map.spacing()[1], map.spacing()[2]};
  j["dtype"] = dtype;
  j["order"] = "x-fastest little-endian";
  std::ofstream sout(sidecar_path, std::ios::binary);
  if (!sout) throw IoFailureError("cannot write: " + sidecar_path);
  sout << j.dump(2) << "\n";
}

} // namespace segquant
