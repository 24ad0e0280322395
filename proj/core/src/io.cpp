#include "nablalmo/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "nablalmo/errors.hpp"

namespace nablalmo {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte);
  }
}

Rational rational_from(const json& v, const std::string& where) {
  if (v.is_string()) {
    try {
      return parse_rational(v.get<std::string>());
    } catch (const ParseError& e) {
      throw ParseError(where + ": " + e.what());
    }
  }
  if (v.is_number_integer()) return Rational(v.dump(), 10);
  throw ParseError(where + ": expected a rational string");
}

QMatrix matrix_from(const json& doc) {
  if (!doc.contains("matrix") || !doc["matrix"].is_array()) throw ParseError("missing \"matrix\" array");
  const json& rows = doc["matrix"];
  const std::size_t n = rows.size();
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!rows[i].is_array() || rows[i].size() != n) {
      throw ParseError("matrix row " + std::to_string(i) + " does not have " + std::to_string(n) + " entries");
    }
    for (std::size_t j = 0; j < n; ++j) {
      m(i, j) = rational_from(rows[i][j], "matrix[" + std::to_string(i) + "][" + std::to_string(j) + "]");
    }
  }
  return m;
}

WheelSeries wheels_from(const json& v, int order, const std::string& where) {
  if (!v.is_object()) throw ParseError(where + ": expected an object of wheel coefficients");
  WheelSeries w(order);
  for (const auto& [key, value] : v.items()) {
    int legs = 0;
    try {
      std::size_t used = 0;
      legs = std::stoi(key, &used);
      if (used != key.size()) throw std::invalid_argument(key);
    } catch (const std::exception&) {
      throw ParseError(where + ": wheel key '" + key + "' is not an integer");
    }
    if (legs < 2 || legs % 2 != 0 || legs > order) {
      throw ParseError(where + ": wheel w" + key + " is not an even wheel within order " + std::to_string(order));
    }
    w.set(EvenWheel::with_legs(legs), rational_from(value, where + "." + key));
  }
  return w;
}

ordered_json wheels_to(const WheelSeries& w) {
  ordered_json out = ordered_json::object();
  for (const auto& [wheel, a] : w.coefficients()) out[std::to_string(wheel.legs())] = to_string(a);
  return out;
}

}  // namespace

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read file '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

SeifertInput parse_seifert_json(std::string_view text) {
  const json doc = parse_json(text);
  if (!doc.is_object()) throw ParseError("Seifert file must be a JSON object");
  SeifertInput input;
  input.seifert = SeifertMatrix(matrix_from(doc));
  if (doc.contains("components")) {
    if (!doc["components"].is_number_integer() || doc["components"].get<int>() < 1) {
      throw ParseError("\"components\" must be a positive integer");
    }
    input.components = doc["components"].get<int>();
  }
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) throw ParseError("\"name\" must be a string");
    input.name = doc["name"].get<std::string>();
  }
  return input;
}

SeifertInput read_seifert_file(const std::filesystem::path& path) { return parse_seifert_json(read_text_file(path)); }

FramedLinkMatrix parse_linking_json(std::string_view text) {
  const json doc = parse_json(text);
  if (!doc.is_object()) throw ParseError("linking-matrix file must be a JSON object");
  if (!doc.contains("labels") || !doc["labels"].is_array()) throw ParseError("missing \"labels\" array");
  std::vector<std::string> labels;
  for (const auto& l : doc["labels"]) {
    if (!l.is_string()) throw ParseError("labels must be strings");
    labels.push_back(l.get<std::string>());
  }
  std::vector<std::string> surgery;
  if (doc.contains("surgery")) {
    if (!doc["surgery"].is_array()) throw ParseError("\"surgery\" must be an array of labels");
    for (const auto& l : doc["surgery"]) {
      if (!l.is_string()) throw ParseError("surgery labels must be strings");
      surgery.push_back(l.get<std::string>());
    }
  }
  try {
    return FramedLinkMatrix(std::move(labels), surgery, matrix_from(doc));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

FramedLinkMatrix read_linking_file(const std::filesystem::path& path) {
  return parse_linking_json(read_text_file(path));
}

std::string to_json(const LmoWheelData& data) {
  ordered_json out;
  out["order"] = data.order;
  out["h1_order"] = data.h1_order.get_str();
  out["knot_wheels"] = wheels_to(data.knot_wheels);
  out["nu_wheels"] = wheels_to(data.nu_wheels);
  return out.dump(2);
}

LmoWheelData parse_lmo_json(std::string_view text) {
  const json doc = parse_json(text);
  if (!doc.is_object()) throw ParseError("LMO wheel file must be a JSON object");
  LmoWheelData data;
  if (!doc.contains("order") || !doc["order"].is_number_integer() || doc["order"].get<int>() < 0) {
    throw ParseError("\"order\" must be a non-negative integer");
  }
  data.order = doc["order"].get<int>();
  if (!doc.contains("h1_order")) throw ParseError("missing \"h1_order\"");
  const Rational h1 = rational_from(doc["h1_order"], "h1_order");
  if (!is_integer(h1) || h1 <= 0) throw ParseError("\"h1_order\" must be a positive integer");
  data.h1_order = h1.get_num();
  if (!doc.contains("knot_wheels") || !doc.contains("nu_wheels")) {
    throw ParseError("missing \"knot_wheels\" or \"nu_wheels\"");
  }
  data.knot_wheels = wheels_from(doc["knot_wheels"], data.order, "knot_wheels");
  data.nu_wheels = wheels_from(doc["nu_wheels"], data.order, "nu_wheels");
  return data;
}

LmoWheelData read_lmo_file(const std::filesystem::path& path) { return parse_lmo_json(read_text_file(path)); }

}  // namespace nablalmo
