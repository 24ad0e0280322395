#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "nablalmo/mmr.hpp"
#include "nablalmo/seifert.hpp"
#include "nablalmo/surgery.hpp"

namespace nablalmo {

// JSON file formats. Rational entries are strings ("-1", "1/2"); plain JSON
// integers are accepted too. All readers throw ParseError.

/// {"matrix": [["-1","1"],["0","-1"]], "components": 1, "name": "trefoil"}
struct SeifertInput {
  SeifertMatrix seifert;
  int components = 1;
  std::string name;
};

SeifertInput parse_seifert_json(std::string_view text);
SeifertInput read_seifert_file(const std::filesystem::path& path);

/// {"labels": ["x","a"], "surgery": ["x"], "matrix": [["1","1"],["1","0"]]}
FramedLinkMatrix parse_linking_json(std::string_view text);
FramedLinkMatrix read_linking_file(const std::filesystem::path& path);

/// {"order": 16, "h1_order": "3", "knot_wheels": {"2": "-23/48", ...},
///  "nu_wheels": {"2": "1/48", ...}}; wheel keys are leg counts.
std::string to_json(const LmoWheelData& data);
LmoWheelData parse_lmo_json(std::string_view text);
LmoWheelData read_lmo_file(const std::filesystem::path& path);

/// Whole file as a string; throws ParseError when unreadable.
std::string read_text_file(const std::filesystem::path& path);

}  // namespace nablalmo
