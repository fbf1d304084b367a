#include "hardy/io.hpp"

#include <cmath>
#include <fmt/format.h>
#include <fstream>
#include <json.hpp>
#include <set>
#include <sstream>

#include "hardy/errors.hpp"

namespace hardy::io {

namespace {

using Json = nlohmann::ordered_json;

Json parse_json(const std::string& text, const char* what) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ValidationError(std::string(what) + ": " + e.what());
  }
}

void require_object(const Json& j, const char* what, const std::set<std::string>& allowed) {
  if (!j.is_object()) throw ValidationError(std::string(what) + ": expected a JSON object");
  for (const auto& [key, _] : j.items()) {
    if (!allowed.contains(key)) {
      throw ValidationError(std::string(what) + ": unknown field '" + key + "'");
    }
  }
}

double number_at(const Json& j, const std::string& key, const std::string& where) {
  if (!j.contains(key)) throw ValidationError(where + ": missing field '" + key + "'");
  const Json& v = j.at(key);
  if (!v.is_number()) throw ValidationError(where + "." + key + " must be a number");
  return v.get<double>();
}

const Json& array_at(const Json& j, const std::string& key, const std::string& where, bool required) {
  static const Json empty = Json::array();
  if (!j.contains(key)) {
    if (required) throw ValidationError(where + ": missing field '" + key + "'");
    return empty;
  }
  const Json& v = j.at(key);
  if (!v.is_array()) throw ValidationError(where + "." + key + " must be an array");
  return v;
}

std::vector<double> numbers(const Json& arr, const std::string& name) {
  std::vector<double> out;
  out.reserve(arr.size());
  for (std::size_t i = 0; i < arr.size(); ++i) {
    if (!arr[i].is_number()) {
      throw ValidationError(name + "[" + std::to_string(i) + "] must be a number");
    }
    out.push_back(arr[i].get<double>());
  }
  return out;
}

}  // namespace

Distribution parse_distribution(const std::string& text) {
  const Json j = parse_json(text, "distribution");
  require_object(j, "distribution", {"atoms", "segments"});
  std::vector<Atom> atoms;
  std::vector<Segment> segments;
  const Json& ja = array_at(j, "atoms", "distribution", false);
  for (std::size_t i = 0; i < ja.size(); ++i) {
    const std::string where = "atoms[" + std::to_string(i) + "]";
    require_object(ja[i], where.c_str(), {"x", "mass"});
    atoms.push_back({number_at(ja[i], "x", where), number_at(ja[i], "mass", where)});
  }
  const Json& js = array_at(j, "segments", "distribution", false);
  for (std::size_t i = 0; i < js.size(); ++i) {
    const std::string where = "segments[" + std::to_string(i) + "]";
    require_object(js[i], where.c_str(), {"lo", "hi", "mass"});
    segments.push_back(
        {number_at(js[i], "lo", where), number_at(js[i], "hi", where), number_at(js[i], "mass", where)});
  }
  return Distribution(std::move(atoms), std::move(segments));
}

StepFunction parse_step_function(const std::string& text) {
  const Json j = parse_json(text, "step function");
  require_object(j, "step function", {"breakpoints", "values"});
  return StepFunction(numbers(array_at(j, "breakpoints", "step function", true), "breakpoints"),
                      numbers(array_at(j, "values", "step function", true), "values"));
}

SequenceInput parse_sequence(const std::string& text) {
  const Json j = parse_json(text, "sequence");
  require_object(j, "sequence", {"terms", "tail", "tail_bound"});
  auto terms = numbers(array_at(j, "terms", "sequence", true), "terms");
  auto tail = SequenceInput::Tail::zeros;
  if (j.contains("tail")) {
    const Json& t = j.at("tail");
    if (t == "zeros") {
      tail = SequenceInput::Tail::zeros;
    } else if (t == "truncated") {
      tail = SequenceInput::Tail::truncated;
    } else {
      throw ValidationError("sequence.tail must be \"zeros\" or \"truncated\"");
    }
  }
  const double bound = j.contains("tail_bound") ? number_at(j, "tail_bound", "sequence") : 0.0;
  return SequenceInput(std::move(terms), tail, bound);
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot read '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

namespace {

template <class T, class Parse>
T load(const std::filesystem::path& path, Parse parse) {
  const std::string text = read_file(path);
  try {
    return parse(text);
  } catch (const ValidationError& e) {
    throw ValidationError(path.string() + ": " + e.what());
  }
}

std::string number_list(const std::vector<double>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += format_number(v[i]);
  }
  return out + "]";
}

}  // namespace

Distribution load_distribution(const std::filesystem::path& path) {
  return load<Distribution>(path, parse_distribution);
}
StepFunction load_step_function(const std::filesystem::path& path) {
  return load<StepFunction>(path, parse_step_function);
}
SequenceInput load_sequence(const std::filesystem::path& path) {
  return load<SequenceInput>(path, parse_sequence);
}

std::string to_json(const Distribution& d) {
  std::string out = "{\"atoms\": [";
  for (std::size_t i = 0; i < d.atoms().size(); ++i) {
    const Atom& a = d.atoms()[i];
    out += fmt::format("{}{{\"x\": {}, \"mass\": {}}}", i ? ", " : "", format_number(a.x),
                       format_number(a.mass));
  }
  out += "], \"segments\": [";
  for (std::size_t i = 0; i < d.segments().size(); ++i) {
    const Segment& s = d.segments()[i];
    out += fmt::format("{}{{\"lo\": {}, \"hi\": {}, \"mass\": {}}}", i ? ", " : "",
                       format_number(s.lo), format_number(s.hi), format_number(s.mass));
  }
  return out + "]}";
}

std::string to_json(const StepFunction& psi) {
  return "{\"breakpoints\": " + number_list(psi.breakpoints()) +
         ", \"values\": " + number_list(psi.values()) + "}";
}

std::string format_number(double v) {
  if (std::isnan(v)) return "\"nan\"";
  if (std::isinf(v)) return v > 0 ? "\"inf\"" : "\"-inf\"";
  if (v == 0.0) return "0";  // also folds -0
  return fmt::format("{:.17g}", v);
}

}  // namespace hardy::io
