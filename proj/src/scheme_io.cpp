#include "multireg/scheme_io.hpp"

#include <fstream>
#include <iterator>
#include <sstream>

#include <json.hpp>

namespace multireg {

namespace {

using nlohmann::json;

Field parse_field_object(const json& f) {
  if (!f.is_object() || !f.contains("mode") || !f["mode"].is_string()) {
    throw SchemeFormatError("\"field\" must be an object with a string \"mode\"");
  }
  const auto mode = f["mode"].get<std::string>();
  if (mode == "rational") return Field::rational();
  if (mode == "prime") {
    if (!f.contains("p")) return Field::prime(kDefaultPrime);
    if (!f["p"].is_number_unsigned()) throw SchemeFormatError("\"p\" must be a positive integer");
    try {
      return Field::prime(f["p"].get<std::uint64_t>());
    } catch (const std::invalid_argument& e) {
      throw SchemeFormatError(e.what());
    }
  }
  throw SchemeFormatError("unknown field mode \"" + mode + "\"");
}

}  // namespace

SchemeFile parse_scheme(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SchemeFormatError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw SchemeFormatError("scheme document must be a JSON object");
  if (!doc.contains("spaces") || !doc["spaces"].is_array()) {
    throw SchemeFormatError("missing \"spaces\" array");
  }
  if (!doc.contains("points") || !doc["points"].is_array()) {
    throw SchemeFormatError("missing \"points\" array");
  }
  try {
    std::vector<int> spaces;
    for (const auto& n : doc["spaces"]) {
      if (!n.is_number_integer()) throw SchemeFormatError("\"spaces\" entries must be integers");
      spaces.push_back(n.get<int>());
    }
    SpaceShape shape(std::move(spaces));

    std::vector<FatPoint> points;
    for (const auto& p : doc["points"]) {
      if (!p.is_object() || !p.contains("coords") || !p["coords"].is_array()) {
        throw SchemeFormatError("every point needs a \"coords\" array");
      }
      std::vector<std::vector<std::int64_t>> factors;
      for (const auto& factor : p["coords"]) {
        if (!factor.is_array()) throw SchemeFormatError("\"coords\" must hold one array per factor");
        std::vector<std::int64_t> v;
        for (const auto& c : factor) {
          if (!c.is_number_integer()) throw SchemeFormatError("coordinates must be integers");
          v.push_back(c.get<std::int64_t>());
        }
        factors.push_back(std::move(v));
      }
      int mult = 1;
      if (p.contains("mult")) {
        if (!p["mult"].is_number_integer()) throw SchemeFormatError("\"mult\" must be an integer");
        mult = p["mult"].get<int>();
      }
      points.push_back(FatPoint{MultiPoint(std::move(factors)), mult});
    }
    Field field = doc.contains("field") ? parse_field_object(doc["field"]) : Field::rational();
    return SchemeFile{FatPointScheme(std::move(shape), std::move(points)), field};
  } catch (const SchemeFormatError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw SchemeFormatError(e.what());
  } catch (const json::exception& e) {
    throw SchemeFormatError(e.what());
  }
}

SchemeFile read_scheme_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemeFormatError("cannot open " + path);
  const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return parse_scheme(text);
}

std::string scheme_to_json(const FatPointScheme& z) {
  json doc;
  doc["spaces"] = z.shape().factors();
  doc["points"] = json::array();
  for (const auto& fp : z.points()) {
    doc["points"].push_back({{"coords", fp.point.factors()}, {"mult", fp.multiplicity}});
  }
  return doc.dump();
}

std::string region_to_json(const UpSet& region) {
  json corners = json::array();
  for (const auto& c : region.corners()) corners.push_back(c.coords());
  return json{{"corners", corners}}.dump();
}

Field parse_field_spec(const std::string& spec) {
  if (spec == "rational") return Field::rational();
  if (spec == "prime") return Field::prime(kDefaultPrime);
  if (spec.rfind("prime:", 0) == 0) {
    const std::string digits = spec.substr(6);
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos) {
      throw SchemeFormatError("malformed prime in field spec \"" + spec + "\"");
    }
    try {
      return Field::prime(std::stoull(digits));
    } catch (const std::invalid_argument& e) {
      throw SchemeFormatError(e.what());
    } catch (const std::out_of_range&) {
      throw SchemeFormatError("prime out of range in field spec \"" + spec + "\"");
    }
  }
  throw SchemeFormatError("field spec must be \"rational\" or \"prime:P\", got \"" + spec + "\"");
}

}  // namespace multireg
