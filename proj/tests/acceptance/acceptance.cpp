#include <chrono>
#include <cmath>
#include <cstdio>
#include <fmt/core.h>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "hardy/alpha_solver.hpp"
#include "hardy/distribution.hpp"
#include "hardy/functionals.hpp"
#include "hardy/limit_study.hpp"
#include "hardy/oracle.hpp"
#include "hardy/random_cases.hpp"
#include "hardy/suite.hpp"

using namespace hardy;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

int failures = 0;

void report(int id, const std::string& name, bool ok, const std::string& detail) {
  if (!ok) ++failures;
  fmt::print("{} {}. {}: {}\n", ok ? "PASS" : "FAIL", id, name, detail);
  std::fflush(stdout);
}

const SuiteCheck* find(const std::vector<SuiteCheck>& checks, const std::string& name) {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

// All named checks present and failure-free; detail lists counts.
bool checks_pass(const std::vector<SuiteCheck>& checks, const std::vector<std::string>& names,
                 std::string& detail) {
  bool ok = true;
  for (const auto& name : names) {
    const SuiteCheck* c = find(checks, name);
    if (c == nullptr) {
      detail += fmt::format("[{}: missing] ", name);
      ok = false;
      continue;
    }
    detail += fmt::format("[{}: {}/{} failed] ", name, c->failures, c->cases);
    if (c->failures != 0) {
      ok = false;
      detail += "first: " + c->first_failure + " ";
    }
  }
  return ok;
}

std::string run_cli(const std::string& args) {
  const std::string cmd = std::string(HARDY_VERIFY_BIN) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return {};
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  pclose(pipe);
  return out;
}

const Distribution kUniform({}, {{0.0, 1.0, 1.0}});
const StepFunction kOne = StepFunction::constant(1.0);

void constant_psi_equality() {
  const auto start = Clock::now();
  bool ok = true;
  std::string detail;
  for (double p : {1.5, 2.0, 3.0}) {
    const auto r = eval_hardy_gt1(kUniform, kOne, PNorm(p));
    const double gap = std::abs(r.lhs - r.rhs());
    const double alpha = r.alpha.value_or(std::nan(""));
    ok = ok && gap <= 1e-9 && std::abs(alpha - 1.0) <= 1e-12;
    detail += fmt::format("p={} |lhs-rhs|={:.2e} alpha-1={:.2e}; ", p, gap, alpha - 1.0);
  }
  const double t = seconds_since(start);
  report(1, "constant-psi equality", ok && t < 1.0, detail + fmt::format("{:.3f}s", t));
}

void derived_constants() {
  const double pi = std::numbers::pi;
  struct Row {
    const char* name;
    double got;
    double want;
  };
  const std::vector<Row> rows = {
      {"int (-ln x)^2", eval_copson(kUniform, kOne, PNorm(2.0)).lhs_unrooted, 2.0},
      {"int sqrt(-ln x)", eval_copson(kUniform, kOne, PNorm(0.5)).lhs_unrooted, std::sqrt(pi) / 2},
      {"int sqrt((1-x)/x)", eval_hardy_lt1(kUniform, kOne, PNorm(0.5)).lhs_unrooted, pi / 2},
  };
  bool ok = true;
  std::string detail;
  for (const auto& r : rows) {
    const double err = std::abs(r.got - r.want);
    ok = ok && err <= 1e-8;
    detail += fmt::format("{} err={:.2e}; ", r.name, err);
  }
  report(4, "derived constants by quadrature", ok, detail);
}

void basel() {
  const auto start = Clock::now();
  const auto r = eval_discrete(SequenceInput({1.0}), PNorm(2.0), Regime::gt1);
  const double t = seconds_since(start);
  const double target = std::numbers::pi * std::numbers::pi / 6;
  bool ok = r.lhs_bracket.has_value() && r.satisfied && r.rhs_classic == 4.0 && t < 5.0;
  double width = std::nan("");
  if (r.lhs_bracket) {
    width = r.lhs_bracket->upper - r.lhs_bracket->lower;
    ok = ok && r.lhs_bracket->lower <= target && target <= r.lhs_bracket->upper && width < 1e-6;
  }
  report(5, "discrete Basel check", ok,
         fmt::format("lhs={:.12f} width={:.2e} rhs={} {:.3f}s", r.lhs, width, r.rhs_classic, t));
}

void limit() {
  const std::vector<long> Ks = {10, 100, 1000};
  const SequenceInput basel({1.0});
  bool ok = true;
  std::string detail;
  for (auto construction : {LimitConstruction::discrete, LimitConstruction::continuous}) {
    // The continuous gap equals the tail integral 1/K exactly, so allow rounding.
    const double slack = construction == LimitConstruction::continuous ? 1e-12 : 0.0;
    const auto rows = limit_study(basel, PNorm(2.0), Ks, construction);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const auto& r = rows[i];
      const double envelope = 1.0 / static_cast<double>(r.K);
      ok = ok && r.alpha.has_value() && r.gap_to_classic >= 0.0 &&
           (slack == 0.0 ? r.gap_to_classic < envelope : r.gap_to_classic <= envelope * (1.0 + slack)) &&
           *r.alpha < 10.0 * envelope;
      if (i > 0) ok = ok && r.alpha && rows[i - 1].alpha && *r.alpha < *rows[i - 1].alpha;
    }
    detail += fmt::format("{}: alpha_K={:.3e},{:.3e},{:.3e} K*gap={:.6f},{:.6f},{:.6f}; ",
                          construction == LimitConstruction::discrete ? "discrete" : "uniform(0,K)",
                          rows[0].alpha.value_or(0), rows[1].alpha.value_or(0), rows[2].alpha.value_or(0),
                          rows[0].gap_to_classic * 10, rows[1].gap_to_classic * 100,
                          rows[2].gap_to_classic * 1000);
  }
  const SequenceInput seq({1.0, 0.5, 0.25});
  const auto lt1 = limit_study(seq, PNorm(0.5), {1000});
  const double left = eval_discrete(seq, PNorm(0.5), Regime::lt1).lhs_unrooted;
  const double diff = std::abs(lt1[0].scaled_lhs - left);
  ok = ok && diff <= 1e-3;
  detail += fmt::format("p=0.5 K=1000 |scaled-left|={:.2e}", diff);
  report(6, "limit study", ok, detail);
}

// Mixed law whose lowest support component is a segment, so the tail ratio
// (divided by F(x-)) stays finite and the comparison is informative.
Distribution mixed_law(random::Rng& rng) {
  const random::LawShape shape{.min_atoms = 1, .max_atoms = 8, .min_segments = 1, .max_segments = 4};
  for (;;) {
    Distribution d = random::law(rng, shape);
    if (d.segments().front().lo < d.atoms().front().x) return d;
  }
}

std::string monte_carlo_agreement(bool& ok) {
  constexpr int kCases = 200;
  constexpr std::uint64_t kN = 1'000'000;
  int agree = 0;
  for (int i = 0; i < kCases; ++i) {
    random::Rng rng(random::case_seed(20261016, static_cast<std::uint64_t>(i)));
    const Distribution d = mixed_law(rng);
    const StepFunction psi = random::step(rng, d);
    double expected;
    Functional f;
    PNorm p(2.0);
    switch (i % 3) {
      case 0:
        p = random::exponent(rng, Regime::gt1);
        f = Functional::hardy_gt1;
        expected = hardy_lower_functional(d, psi, p.value()).value;
        break;
      case 1:
        p = random::exponent(rng, Regime::gt1);
        f = Functional::copson;
        expected = copson_functional(d, psi, p.value()).value;
        break;
      default:
        p = PNorm(random::uniform(rng, 0.05, 0.35));
        f = Functional::hardy_lt1;
        expected = hardy_tail_functional(d, psi, p.value()).value;
        break;
    }
    const auto mc = mc_estimate(d, psi, p, f, random::case_seed(7, static_cast<std::uint64_t>(i)), kN);
    const bool both_inf = std::isinf(mc.mean) && std::isinf(expected);
    if (both_inf || std::abs(mc.mean - expected) <= 4.0 * mc.std_error + 1e-12 * std::abs(mc.mean)) ++agree;
  }
  const bool pass = agree * 100 >= 99 * kCases;
  ok = ok && pass;
  return fmt::format("MC agreement {}/{}; ", agree, kCases);
}

void oracles(const std::vector<SuiteCheck>& checks) {
  std::string detail;
  bool ok = checks_pass(checks, {"atomic laws vs exact enumeration", "power-integral identity"}, detail);
  const Distribution atom({{0.0, 1.0}}, {});
  const auto gap = power_integral_identity(atom, kOne, PNorm(2.0), IdentityMode::lower).gap;
  ok = ok && std::abs(gap) >= 0.5;
  detail += fmt::format("single-atom gap={}; ", gap);
  detail += monte_carlo_agreement(ok);
  report(8, "oracle agreement", ok, detail);
}

void determinism() {
  const std::string data = HARDY_TEST_DATA;
  const std::vector<std::string> commands = {
      "verify --theorem hardy-gt1 --dist " + data + "/mixed.json --psi " + data +
          "/psi_mixed.json --p 2.5 --seed 11 --mc-n 20000",
      "verify --theorem copson --dist " + data + "/mixed.json --psi " + data + "/psi_mixed.json --p 0.5",
      "alpha --dist " + data + "/mixed.json --psi " + data + "/psi_mixed.json --p 2",
      "limit-study --seq " + data + "/seq_three.json --p 2 --K 10,100,1000",
  };
  bool ok = true;
  for (const auto& c : commands) {
    const std::string a = run_cli(c);
    const std::string b = run_cli(c);
    ok = ok && !a.empty() && a == b;
  }
  report(9, "CLI determinism", ok, fmt::format("{} commands run twice, byte-compared", commands.size()));
}

}  // namespace

int main() {
  constant_psi_equality();

  const auto start = Clock::now();
  const auto checks = run_property_suite({.cases = 500, .seed = 0});
  const double t = seconds_since(start);
  {
    std::string detail;
    const bool ok = checks_pass(checks,
                                {"hardy-gt1 inequality", "hardy-lt1 inequality", "copson p>=1 inequality",
                                 "copson p<1 inequality"},
                                detail);
    report(2, "randomized inequality suite", ok && t < 60.0, detail + fmt::format("{:.2f}s", t));
  }
  {
    std::string detail;
    const bool ok = checks_pass(checks, {"alpha residual", "alpha p=2 closed form", "alpha equation convexity"},
                                detail);
    report(3, "alpha solver", ok, detail);
  }
  derived_constants();
  basel();
  limit();
  {
    std::string detail;
    const bool ok = checks_pass(checks,
                                {"stretch_up invariants", "stretch_down invariants",
                                 "rearrangement norm and domination"},
                                detail);
    report(7, "transform invariants", ok, detail);
  }
  oracles(checks);
  determinism();
  return failures == 0 ? 0 : 1;
}
