#include "dustbench/palette.hpp"

#include <algorithm>
#include <fstream>

#include "json.hpp"

namespace dustbench {

const std::vector<std::string>& default_palette_hex() {
  static const std::vector<std::string> kCodes = {
      "#C89463", "#C6853D", "#C17137", "#BB9C87", "#B9A99C", "#B97455",
      "#B78E56", "#B56F4B", "#B37A43", "#B39163", "#A77135", "#A58961",
      "#A14A10", "#986339", "#977A38", "#8C6E38", "#84674C", "#826934",
      "#7D6E4A", "#7C766A", "#6F5633",
  };
  return kCodes;
}

Palette default_palette() { return palette_from_hex(default_palette_hex()); }

Palette palette_from_hex(const std::vector<std::string>& codes) {
  Palette out;
  out.reserve(codes.size());
  for (const auto& code : codes) out.push_back(parse_hex(code));
  return out;
}

std::vector<std::string> palette_to_hex(const Palette& palette) {
  std::vector<std::string> out;
  out.reserve(palette.size());
  for (const auto& c : palette) out.push_back(c.hex());
  return out;
}

Palette load_palette(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError(IoErrorKind::kMissingFile, path.string(), "");
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw IoError(IoErrorKind::kCorruptData, path.string(), e.what());
  }
  if (doc.is_object() && doc.contains("palette")) doc = doc["palette"];
  if (!doc.is_array()) {
    throw IoError(IoErrorKind::kCorruptData, path.string(),
                  "expected an array of hex codes");
  }
  std::vector<std::string> codes;
  for (const auto& entry : doc) {
    if (!entry.is_string()) {
      throw IoError(IoErrorKind::kCorruptData, path.string(),
                    "palette entries must be strings");
    }
    codes.push_back(entry.get<std::string>());
  }
  return palette_from_hex(codes);
}

bool palette_contains(const Palette& palette, const ColorDeviation& color) {
  return std::find(palette.begin(), palette.end(), color) != palette.end();
}

}  // namespace dustbench
