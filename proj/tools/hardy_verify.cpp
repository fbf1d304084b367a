#include <CLI11.hpp>
#include <cmath>
#include <fmt/format.h>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include "hardy/alpha_solver.hpp"
#include "hardy/errors.hpp"
#include "hardy/functionals.hpp"
#include "hardy/io.hpp"
#include "hardy/limit_study.hpp"
#include "hardy/oracle.hpp"
#include "hardy/pieces.hpp"
#include "hardy/report_io.hpp"
#include "hardy/suite.hpp"
#include "hardy/transforms.hpp"

namespace {

using namespace hardy;

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitViolated = 2;

struct Config {
  std::string dist_path;
  std::string psi_path;
  std::string seq_path;
  std::optional<double> p;
  std::string theorem;
  double quad_tol = 1e-10;
  std::uint64_t seed = 0;
  std::uint64_t mc_n = 0;
  std::vector<long> Ks;
  std::string out_path = "-";
  std::string direction;
  std::string kind;
  std::optional<double> atom;
  std::string mode = "lower";
  std::string construction = "discrete";
  int cases = 500;
};

/// Input problems detected by the driver itself.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <class T>
const T& need(const std::optional<T>& v, const char* flag) {
  if (!v) throw InputError(std::string("missing required flag ") + flag);
  return *v;
}

const std::string& need_path(const std::string& v, const char* flag) {
  if (v.empty()) throw InputError(std::string("missing required flag ") + flag);
  return v;
}

void write_text(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text << std::flush;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot open '" + path + "' for writing");
  out << text;
  out.flush();
  if (!out) throw InputError("failed writing '" + path + "'");
}

std::string num(double v) { return io::format_number(v); }

// ---------------------------------------------------------------- verify

const std::map<std::string, Regime>& theorem_regimes() {
  static const std::map<std::string, Regime> m{
      {"hardy-gt1", Regime::gt1},           {"hardy-lt1", Regime::lt1},
      {"copson", Regime::gt1},              {"classic-integral-gt1", Regime::gt1},
      {"classic-integral-lt1", Regime::lt1}, {"discrete-gt1", Regime::gt1},
      {"discrete-lt1", Regime::lt1},        {"p1-bounds", Regime::eq1}};
  return m;
}

PNorm theorem_exponent(const Config& cfg) {
  if (cfg.theorem == "p1-bounds") {
    if (cfg.p && *cfg.p != 1.0) throw InputError("p1-bounds is defined for p = 1 only");
    return PNorm(1.0);
  }
  const PNorm p(need(cfg.p, "--p"));
  if (cfg.theorem == "copson") {
    return p;  // any p > 0; direction follows from p
  }
  p.require(theorem_regimes().at(cfg.theorem), cfg.theorem.c_str());
  return p;
}

Monotonicity p1_direction(const Config& cfg, const Distribution& d, const StepFunction& psi) {
  if (cfg.direction == "nondecreasing") return Monotonicity::nondecreasing;
  if (cfg.direction == "nonincreasing") return Monotonicity::nonincreasing;
  if (!cfg.direction.empty()) throw InputError("--direction must be nondecreasing or nonincreasing");
  if (nondecreasing_on_support(d, psi)) return Monotonicity::nondecreasing;
  if (nonincreasing_on_support(d, psi)) return Monotonicity::nonincreasing;
  throw InputError("p1-bounds needs psi monotone on the support");
}

int run_verify(const Config& cfg) {
  const PNorm p = theorem_exponent(cfg);
  const EvalOptions opts{.quad_tol = cfg.quad_tol};
  const std::string& t = cfg.theorem;
  const bool probabilistic = t == "hardy-gt1" || t == "hardy-lt1" || t == "copson" || t == "p1-bounds";
  if (cfg.mc_n > 0 && !probabilistic) {
    throw InputError("--mc-n applies to the probabilistic theorems only");
  }

  VerificationReport r;
  if (probabilistic) {
    const Distribution d = io::load_distribution(need_path(cfg.dist_path, "--dist"));
    const StepFunction psi = io::load_step_function(need_path(cfg.psi_path, "--psi"));
    Functional f = Functional::hardy_gt1;
    if (t == "hardy-gt1") {
      r = eval_hardy_gt1(d, psi, p, opts);
    } else if (t == "hardy-lt1") {
      r = eval_hardy_lt1(d, psi, p, opts);
      f = Functional::hardy_lt1;
    } else if (t == "copson") {
      r = eval_copson(d, psi, p, opts);
      f = Functional::copson;
    } else {
      r = eval_p1_bounds(d, psi, p1_direction(cfg, d, psi), opts);
    }
    if (cfg.mc_n > 0) {
      const McEstimate mc = mc_estimate(d, psi, p, f, cfg.seed, cfg.mc_n);
      r.mc = mc;
      r.mc_agrees = (std::isinf(mc.mean) && std::isinf(r.lhs_unrooted)) ||
                    std::abs(mc.mean - r.lhs_unrooted) <= 4.0 * mc.std_error + 1e-12 * std::abs(mc.mean);
    }
  } else if (t == "classic-integral-gt1" || t == "classic-integral-lt1") {
    const StepFunction psi = io::load_step_function(need_path(cfg.psi_path, "--psi"));
    r = eval_classic_integral(psi, p, p.regime(), opts);
  } else {
    const SequenceInput seq = io::load_sequence(need_path(cfg.seq_path, "--seq"));
    r = eval_discrete(seq, p, p.regime(), opts);
  }
  emit_report(r, cfg.out_path);
  const bool ok = r.satisfied && (!r.dual || r.dual->satisfied);
  if (!ok) std::cerr << "inequality violated beyond tolerance (margin " << num(r.margin) << ")\n";
  return ok ? kExitOk : kExitViolated;
}

// ---------------------------------------------------------------- alpha

int run_alpha(const Config& cfg) {
  const PNorm p(need(cfg.p, "--p"));
  p.require(Regime::gt1, "alpha");
  const Distribution d = io::load_distribution(need_path(cfg.dist_path, "--dist"));
  const StepFunction psi = io::load_step_function(need_path(cfg.psi_path, "--psi"));
  const AlphaResult a = solve_alpha(d, psi, p);
  std::string out = fmt::format(
      "{{\n  \"p\": {},\n  \"alpha\": {},\n  \"residual\": {},\n  \"m1\": {},\n  \"mp\": {},\n"
      "  \"iterations\": {},\n  \"alpha_closed_p2\": {}\n}}\n",
      num(p.value()), num(a.alpha), num(a.residual), num(a.m1), num(a.mp), a.iterations,
      p.value() == 2.0 ? num(alpha_closed_p2(d, psi)) : "null");
  write_text(out, cfg.out_path);
  return kExitOk;
}

// ---------------------------------------------------------------- transform

int run_transform(const Config& cfg) {
  const StepFunction psi = io::load_step_function(need_path(cfg.psi_path, "--psi"));
  if (cfg.kind == "rearrange") {
    write_text(io::to_json(decreasing_rearrangement(psi)) + "\n", cfg.out_path);
    return kExitOk;
  }
  const PNorm p(need(cfg.p, "--p"));
  const Distribution d = io::load_distribution(need_path(cfg.dist_path, "--dist"));
  TransformOutput t = [&] {
    if (cfg.kind == "stretch-up") return stretch_up(d, psi, need(cfg.atom, "--atom"), p, cfg.quad_tol);
    if (cfg.kind == "stretch-down") return stretch_down(d, psi, need(cfg.atom, "--atom"), p, cfg.quad_tol);
    if (cfg.kind == "de-atomize-up") return de_atomize(d, psi, StretchKind::up, p, cfg.quad_tol);
    if (cfg.kind == "de-atomize-down") return de_atomize(d, psi, StretchKind::down, p, cfg.quad_tol);
    throw InputError("unknown --kind '" + cfg.kind + "'");
  }();
  std::string out = fmt::format(
      "{{\n  \"dist\": {},\n  \"psi\": {},\n  \"norm_before\": {},\n  \"norm_after\": {},\n"
      "  \"mean_before\": {},\n  \"mean_after\": {},\n  \"functional_before\": {},\n"
      "  \"functional_after\": {}\n}}\n",
      io::to_json(t.dist), io::to_json(t.psi), num(t.norm_before), num(t.norm_after), num(t.mean_before),
      num(t.mean_after), num(t.functional_before), num(t.functional_after));
  write_text(out, cfg.out_path);
  return kExitOk;
}

// ---------------------------------------------------------------- identity

int run_identity(const Config& cfg) {
  const PNorm p(need(cfg.p, "--p"));
  IdentityMode mode = IdentityMode::lower;
  if (cfg.mode == "tail") {
    mode = IdentityMode::tail;
  } else if (cfg.mode != "lower") {
    throw InputError("--mode must be lower or tail");
  }
  const Distribution d = io::load_distribution(need_path(cfg.dist_path, "--dist"));
  const StepFunction psi = io::load_step_function(need_path(cfg.psi_path, "--psi"));
  const IdentityCheck c = power_integral_identity(d, psi, p, mode, cfg.quad_tol);
  write_text(fmt::format("{{\n  \"lhs\": {},\n  \"rhs\": {},\n  \"gap\": {}\n}}\n", num(c.lhs), num(c.rhs),
                         num(c.gap)),
             cfg.out_path);
  return kExitOk;
}

// ---------------------------------------------------------------- limit-study

int run_limit_study(const Config& cfg) {
  const PNorm p(need(cfg.p, "--p"));
  if (cfg.Ks.empty()) throw InputError("missing required flag --K");
  LimitConstruction construction = LimitConstruction::discrete;
  if (cfg.construction == "continuous") {
    construction = LimitConstruction::continuous;
  } else if (cfg.construction != "discrete") {
    throw InputError("--construction must be discrete or continuous");
  }
  const SequenceInput seq = io::load_sequence(need_path(cfg.seq_path, "--seq"));
  const auto rows = limit_study(seq, p, cfg.Ks, construction, {.quad_tol = cfg.quad_tol});
  std::string out = "K,scaled_lhs,scaled_rhs,alpha_K,gap_to_classic\n";
  for (const LimitRow& r : rows) {
    out += fmt::format("{},{},{},{},{}\n", r.K, num(r.scaled_lhs), num(r.scaled_rhs),
                       r.alpha ? num(*r.alpha) : "", num(r.gap_to_classic));
  }
  write_text(out, cfg.out_path);
  return kExitOk;
}

// ---------------------------------------------------------------- suite

int run_suite(const Config& cfg) {
  const auto checks = run_property_suite({.cases = cfg.cases, .seed = cfg.seed, .quad_tol = cfg.quad_tol});
  std::ostringstream os;
  print_suite(os, checks);
  const bool ok = suite_passed(checks);
  os << (ok ? "suite passed\n" : "suite FAILED\n");
  write_text(os.str(), cfg.out_path);
  return ok ? kExitOk : kExitViolated;
}

void add_common(CLI::App* sub, Config& cfg) {
  sub->add_option("--quad-tol", cfg.quad_tol, "absolute quadrature tolerance")
      ->check(CLI::PositiveNumber);
  sub->add_option("--out", cfg.out_path, "output file, '-' for standard output");
}

}  // namespace

int main(int argc, char** argv) {
  Config cfg;
  CLI::App app{"Numerical checks of probabilistic Hardy and Copson inequalities"};
  app.require_subcommand(1);

  auto* verify = app.add_subcommand("verify", "evaluate both sides of one inequality, JSON report");
  verify->add_option("--theorem", cfg.theorem, "inequality to check")
      ->required()
      ->check(CLI::IsMember({"hardy-gt1", "hardy-lt1", "copson", "classic-integral-gt1",
                             "classic-integral-lt1", "discrete-gt1", "discrete-lt1", "p1-bounds"}));
  verify->add_option("--dist", cfg.dist_path, "distribution JSON");
  verify->add_option("--psi", cfg.psi_path, "step function JSON");
  verify->add_option("--seq", cfg.seq_path, "sequence JSON");
  verify->add_option("--p", cfg.p, "exponent");
  verify->add_option("--seed", cfg.seed, "Monte Carlo seed");
  verify->add_option("--mc-n", cfg.mc_n, "Monte Carlo draws (0 skips the cross-check)");
  verify->add_option("--direction", cfg.direction, "p1-bounds: nondecreasing or nonincreasing");
  add_common(verify, cfg);

  auto* alpha = app.add_subcommand("alpha", "solve the sharpened-constant equation");
  alpha->add_option("--dist", cfg.dist_path)->required();
  alpha->add_option("--psi", cfg.psi_path)->required();
  alpha->add_option("--p", cfg.p)->required();
  add_common(alpha, cfg);

  auto* transform = app.add_subcommand("transform", "stretch, de-atomize or rearrange");
  transform->add_option("--kind", cfg.kind)
      ->required()
      ->check(CLI::IsMember({"stretch-up", "stretch-down", "de-atomize-up", "de-atomize-down", "rearrange"}));
  transform->add_option("--dist", cfg.dist_path);
  transform->add_option("--psi", cfg.psi_path)->required();
  transform->add_option("--p", cfg.p);
  transform->add_option("--atom", cfg.atom, "location of the atom to stretch");
  add_common(transform, cfg);

  auto* identity = app.add_subcommand("identity", "both sides of the power-integral identity");
  identity->add_option("--dist", cfg.dist_path)->required();
  identity->add_option("--psi", cfg.psi_path)->required();
  identity->add_option("--p", cfg.p)->required();
  identity->add_option("--mode", cfg.mode, "lower or tail");
  add_common(identity, cfg);

  auto* limit = app.add_subcommand("limit-study", "K-scaled embeddings of a sequence, CSV");
  limit->add_option("--seq", cfg.seq_path)->required();
  limit->add_option("--p", cfg.p)->required();
  limit->add_option("--K", cfg.Ks, "comma-separated list of K")->required()->delimiter(',');
  limit->add_option("--construction", cfg.construction, "discrete or continuous (p > 1)");
  add_common(limit, cfg);

  auto* suite = app.add_subcommand("suite", "randomised property suite");
  suite->add_option("--cases", cfg.cases, "cases per inequality")->check(CLI::PositiveNumber);
  suite->add_option("--seed", cfg.seed);
  add_common(suite, cfg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (*verify) return run_verify(cfg);
    if (*alpha) return run_alpha(cfg);
    if (*transform) return run_transform(cfg);
    if (*identity) return run_identity(cfg);
    if (*limit) return run_limit_study(cfg);
    if (*suite) return run_suite(cfg);
  } catch (const ValidationError& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
  }
  return kExitInput;
}
