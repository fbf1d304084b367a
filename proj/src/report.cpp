#include "hardy/report.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <limits>
#include <stdexcept>

#include "hardy/errors.hpp"
#include "hardy/io.hpp"
#include "hardy/report_io.hpp"

namespace hardy {

const char* to_string(Direction d) {
  return d == Direction::upper_bound ? "upper_bound" : "lower_bound";
}

double relative_margin(double lhs, double rhs, Direction direction) {
  const double scale = std::max(rhs, 1e-300);
  return direction == Direction::upper_bound ? (rhs - lhs) / scale : (lhs - rhs) / scale;
}

namespace {

using Json = nlohmann::ordered_json;

class Writer {
 public:
  void field(const char* name, const std::string& raw) {
    out_ += first_ ? "\n" : ",\n";
    first_ = false;
    out_ += indent_;
    out_ += '"';
    out_ += name;
    out_ += "\": ";
    out_ += raw;
  }
  void number(const char* name, double v) { field(name, io::format_number(v)); }
  void number(const char* name, const std::optional<double>& v) {
    field(name, v ? io::format_number(*v) : "null");
  }
  void boolean(const char* name, bool v) { field(name, v ? "true" : "false"); }
  void text(const char* name, const std::string& v) { field(name, Json(v).dump()); }

  std::string close() {
    std::string indent_outer = indent_.substr(2);
    return "{" + out_ + "\n" + indent_outer + "}";
  }

  explicit Writer(int depth) : indent_(static_cast<std::size_t>(2 * (depth + 1)), ' ') {}

 private:
  std::string out_;
  std::string indent_;
  bool first_ = true;
};

double read_number(const Json& j, const char* name) {
  const Json& v = j.at(name);
  if (v.is_number()) return v.get<double>();
  if (v.is_string()) {
    const auto s = v.get<std::string>();
    if (s == "inf") return std::numeric_limits<double>::infinity();
    if (s == "-inf") return -std::numeric_limits<double>::infinity();
    if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
  }
  throw ValidationError(std::string("report field '") + name + "' is not a number");
}

std::optional<double> read_optional(const Json& j, const char* name) {
  if (!j.contains(name) || j.at(name).is_null()) return std::nullopt;
  return read_number(j, name);
}

Direction read_direction(const std::string& s) {
  if (s == "upper_bound") return Direction::upper_bound;
  if (s == "lower_bound") return Direction::lower_bound;
  throw ValidationError("unknown direction '" + s + "'");
}

}  // namespace

std::string report_to_json(const VerificationReport& r) {
  Writer w(0);
  w.text("schema_version", kReportSchemaVersion);
  w.text("theorem", r.theorem);
  w.number("p", r.p);
  w.number("lhs", r.lhs);
  w.number("rhs_sharpened", r.rhs_sharpened);
  w.number("rhs_classic", r.rhs_classic);
  w.number("alpha", r.alpha);
  w.boolean("satisfied", r.satisfied);
  w.number("margin", r.margin);
  w.number("quad_error", r.quad_error);
  if (r.mc) {
    Writer mc(1);
    mc.number("mean", r.mc->mean);
    mc.number("std_error", r.mc->std_error);
    mc.field("n", std::to_string(r.mc->n));
    mc.field("seed", std::to_string(r.mc->seed));
    w.field("mc", mc.close());
  } else {
    w.field("mc", "null");
  }
  w.text("direction", to_string(r.direction));
  w.number("lhs_unrooted", r.lhs_unrooted);
  w.number("rhs_unrooted", r.rhs_unrooted);
  if (r.lhs_bracket) {
    Writer b(1);
    b.number("lower", r.lhs_bracket->lower);
    b.number("upper", r.lhs_bracket->upper);
    w.field("lhs_bracket", b.close());
  } else {
    w.field("lhs_bracket", "null");
  }
  if (r.dual) {
    Writer b(1);
    b.number("lhs", r.dual->lhs);
    b.number("bound", r.dual->bound);
    b.text("direction", to_string(r.dual->direction));
    b.boolean("satisfied", r.dual->satisfied);
    w.field("dual", b.close());
  } else {
    w.field("dual", "null");
  }
  w.field("mc_agrees", r.mc_agrees ? (*r.mc_agrees ? "true" : "false") : "null");
  return w.close() + "\n";
}

VerificationReport parse_report(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ValidationError(std::string("report is not valid JSON: ") + e.what());
  }
  try {
    if (j.at("schema_version").get<std::string>() != kReportSchemaVersion) {
      throw ValidationError("unsupported report schema_version");
    }
    VerificationReport r;
    r.theorem = j.at("theorem").get<std::string>();
    r.p = read_number(j, "p");
    r.lhs = read_number(j, "lhs");
    r.rhs_sharpened = read_optional(j, "rhs_sharpened");
    r.rhs_classic = read_number(j, "rhs_classic");
    r.alpha = read_optional(j, "alpha");
    r.satisfied = j.at("satisfied").get<bool>();
    r.margin = read_number(j, "margin");
    r.quad_error = read_number(j, "quad_error");
    if (!j.at("mc").is_null()) {
      const Json& mc = j.at("mc");
      r.mc = McEstimate{read_number(mc, "mean"), read_number(mc, "std_error"),
                        mc.at("n").get<std::uint64_t>(), mc.at("seed").get<std::uint64_t>()};
    }
    if (j.contains("direction")) r.direction = read_direction(j.at("direction").get<std::string>());
    if (j.contains("lhs_unrooted")) r.lhs_unrooted = read_number(j, "lhs_unrooted");
    if (j.contains("rhs_unrooted")) r.rhs_unrooted = read_number(j, "rhs_unrooted");
    if (j.contains("lhs_bracket") && !j.at("lhs_bracket").is_null()) {
      const Json& b = j.at("lhs_bracket");
      r.lhs_bracket = Bracket{read_number(b, "lower"), read_number(b, "upper")};
    }
    if (j.contains("dual") && !j.at("dual").is_null()) {
      const Json& b = j.at("dual");
      r.dual = DualBound{read_number(b, "lhs"), read_number(b, "bound"),
                         read_direction(b.at("direction").get<std::string>()),
                         b.at("satisfied").get<bool>()};
    }
    if (j.contains("mc_agrees") && !j.at("mc_agrees").is_null()) {
      r.mc_agrees = j.at("mc_agrees").get<bool>();
    }
    return r;
  } catch (const Json::exception& e) {
    throw ValidationError(std::string("malformed report: ") + e.what());
  }
}

void emit_report(const VerificationReport& report, const std::filesystem::path& path) {
  const std::string text = report_to_json(report);
  if (path.empty() || path == "-") {
    std::cout << text << std::flush;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
  out << text;
  out.flush();
  if (!out) throw std::runtime_error("failed writing '" + path.string() + "'");
}

}  // namespace hardy
