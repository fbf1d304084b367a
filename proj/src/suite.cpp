#include "hardy/suite.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <fmt/format.h>
#include <functional>
#include <ostream>

#include "hardy/alpha_solver.hpp"
#include "hardy/functionals.hpp"
#include "hardy/integrate.hpp"
#include "hardy/io.hpp"
#include "hardy/oracle.hpp"
#include "hardy/pieces.hpp"
#include "hardy/random_cases.hpp"
#include "hardy/transforms.hpp"

namespace hardy {

namespace {

using random::Rng;

/// One case returns an empty string on success, otherwise a description.
using CaseFn = std::function<std::string(Rng&, double quad_tol)>;

SuiteCheck run_check(const std::string& name, int cases, std::uint64_t stream, const SuiteConfig& cfg,
                     const CaseFn& fn) {
  SuiteCheck check{name, cases, 0, {}};
  const std::uint64_t base = random::case_seed(cfg.seed, stream);
  for (int i = 0; i < cases; ++i) {
    Rng rng(random::case_seed(base, static_cast<std::uint64_t>(i)));
    std::string failure;
    try {
      failure = fn(rng, cfg.quad_tol);
    } catch (const std::exception& e) {
      failure = std::string("exception: ") + e.what();
    }
    if (!failure.empty()) {
      if (check.failures == 0) check.first_failure = fmt::format("case {}: {}", i, failure);
      ++check.failures;
    }
  }
  return check;
}

std::string describe(const Distribution& d, const StepFunction& psi, double p) {
  return fmt::format("p={} dist={} psi={}", io::format_number(p), io::to_json(d), io::to_json(psi));
}

bool close(double a, double b, double rel, double abs = 0.0) {
  if (a == b) return true;
  return std::abs(a - b) <= std::max(abs, rel * std::max(std::abs(a), std::abs(b)));
}

std::string inequality_case(const VerificationReport& r, const Distribution& d, const StepFunction& psi) {
  if (r.satisfied) return {};
  return fmt::format("{} violated, lhs={} rhs={} margin={} ; {}", r.theorem, r.lhs, r.rhs(), r.margin,
                     describe(d, psi, r.p));
}

/// Integral of a step function over [0, u].
double integral_to(const StepFunction& f, double u) {
  double total = 0.0;
  double x = 0.0;
  for (double b : f.breakpoints()) {
    if (b <= x) continue;
    if (b >= u) break;
    total += f(x) * (b - x);
    x = b;
  }
  return total + f(x) * (u - x);
}

double power_integral_unit(const StepFunction& f, double p) {
  double total = 0.0;
  double x = 0.0;
  for (double b : f.breakpoints()) {
    if (b <= x) continue;
    if (b >= 1.0) break;
    total += std::pow(std::abs(f(x)), p) * (b - x);
    x = b;
  }
  return total + std::pow(std::abs(f(x)), p) * (1.0 - x);
}

StepFunction random_unit_step(Rng& rng) {
  const int pieces = random::uniform_int(rng, 1, 10);
  std::vector<double> cuts{0.0, 1.0};
  for (int i = 1; i < pieces; ++i) cuts.push_back(random::uniform(rng, 0.0, 1.0));
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  std::vector<double> values{0.0};
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    values.push_back(random::coin(rng, 0.15) ? 0.0 : random::uniform(rng, 0.0, 5.0));
  }
  values.push_back(0.0);
  return StepFunction(std::move(cuts), std::move(values));
}

}  // namespace

std::vector<SuiteCheck> run_property_suite(const SuiteConfig& cfg) {
  const int n = cfg.cases;
  std::vector<SuiteCheck> out;
  std::uint64_t stream = 0;
  auto add = [&](const std::string& name, int cases, const CaseFn& fn) {
    out.push_back(run_check(name, cases, ++stream, cfg, fn));
  };
  const random::StepShape signed_step{.signed_values = true};
  const random::StepShape nonneg_step{};

  add("hardy-gt1 inequality", n, [&](Rng& rng, double tol) {
    const Distribution d = random::law(rng);
    const StepFunction psi = random::step(rng, d, signed_step);
    const PNorm p = random::exponent(rng, Regime::gt1);
    const auto r = eval_hardy_gt1(d, psi, p, {.quad_tol = tol});
    if (auto f = inequality_case(r, d, psi); !f.empty()) return f;
    if (r.rhs_sharpened && *r.rhs_sharpened > r.rhs_classic * (1.0 + 1e-15)) {
      return "rhs_sharpened exceeds rhs_classic; " + describe(d, psi, r.p);
    }
    return std::string();
  });

  add("hardy-lt1 inequality", n, [&](Rng& rng, double tol) {
    const Distribution d = random::law(rng);
    const StepFunction psi = random::step(rng, d, nonneg_step);
    const PNorm p = random::exponent(rng, Regime::lt1);
    return inequality_case(eval_hardy_lt1(d, psi, p, {.quad_tol = tol}), d, psi);
  });

  add("copson p>=1 inequality", n, [&](Rng& rng, double tol) {
    const Distribution d = random::law(rng);
    const StepFunction psi = random::step(rng, d, signed_step);
    const PNorm p = random::coin(rng, 0.1) ? PNorm(1.0) : random::exponent(rng, Regime::gt1);
    return inequality_case(eval_copson(d, psi, p, {.quad_tol = tol}), d, psi);
  });

  add("copson p<1 inequality", n, [&](Rng& rng, double tol) {
    const Distribution d = random::law(rng);
    const StepFunction psi = random::step(rng, d, nonneg_step);
    const PNorm p = random::exponent(rng, Regime::lt1);
    return inequality_case(eval_copson(d, psi, p, {.quad_tol = tol}), d, psi);
  });

  add("alpha residual", n, [&](Rng& rng, double) {
    const Distribution d = random::law(rng);
    const StepFunction psi = random::step(rng, d, signed_step);
    const PNorm p = random::exponent(rng, Regime::gt1);
    if (zero_on_support(d, psi)) return std::string();
    const AlphaResult a = solve_alpha(d, psi, p);
    if (!(a.alpha >= 0.0 && a.alpha <= 1.0)) return fmt::format("alpha {} outside [0, 1]", a.alpha);
    if (std::abs(a.residual) > 1e-12 * std::max(1.0, a.m1)) {
      return fmt::format("residual {} at alpha {}; {}", a.residual, a.alpha, describe(d, psi, p.value()));
    }
    if (alpha_equation(0.0, a.m1, a.mp, p.value()) < -1e-14 ||
        alpha_equation(1.0, a.m1, a.mp, p.value()) > 1e-14) {
      return std::string("bracket signs violated");
    }
    return std::string();
  });

  add("alpha p=2 closed form", 300, [&](Rng& rng, double) {
    const Distribution d = random::law(rng, {.min_atoms = 2, .max_atoms = 5, .min_segments = 0, .max_segments = 0});
    const StepFunction psi = random::step(rng, d, signed_step);
    if (zero_on_support(d, psi)) return std::string();
    const double closed = alpha_closed_p2(d, psi);
    const double solved = solve_alpha(d, psi, PNorm(2.0)).alpha;
    if (std::abs(closed - solved) > 1e-10) {
      return fmt::format("closed {} vs solved {}; {}", closed, solved, describe(d, psi, 2.0));
    }
    return std::string();
  });

  add("alpha equation convexity", 10'000, [&](Rng& rng, double) {
    const double m1 = random::uniform(rng, 0.01, 5.0);
    const double mp = m1 * (1.0 + random::uniform(rng, 0.0, 3.0));
    const double p = random::exponent(rng, Regime::gt1).value();
    double a1 = random::uniform(rng, 0.0, 1.0);
    double a2 = random::uniform(rng, 0.0, 1.0);
    if (a1 > a2) std::swap(a1, a2);
    const double t = random::uniform(rng, 0.0, 1.0);
    const double mid = alpha_equation(t * a1 + (1.0 - t) * a2, m1, mp, p);
    const double chord = t * alpha_equation(a1, m1, mp, p) + (1.0 - t) * alpha_equation(a2, m1, mp, p);
    if (mid > chord + 1e-12) return fmt::format("g not convex: {} > {}", mid, chord);
    return std::string();
  });

  add("alpha scale invariance", 200, [&](Rng& rng, double tol) {
    const Distribution d = random::law(rng);
    const StepFunction psi = random::step(rng, d, signed_step);
    const PNorm p = random::exponent(rng, Regime::gt1);
    if (zero_on_support(d, psi)) return std::string();
    const double lambda = random::uniform(rng, 0.1, 10.0);
    const auto r1 = eval_hardy_gt1(d, psi, p, {.quad_tol = tol});
    const auto r2 = eval_hardy_gt1(d, psi.scaled(lambda), p, {.quad_tol = tol});
    if (std::abs(*r1.alpha - *r2.alpha) > 1e-12) return fmt::format("alpha {} vs {}", *r1.alpha, *r2.alpha);
    if (!close(lambda * r1.lhs, r2.lhs, 1e-9) || !close(lambda * *r1.rhs_sharpened, *r2.rhs_sharpened, 1e-12) ||
        !close(lambda * r1.rhs_classic, r2.rhs_classic, 1e-12) || r1.satisfied != r2.satisfied) {
      return "scaling covariance broken; " + describe(d, psi, p.value());
    }
    return std::string();
  });

  add("quantile-domain identity", 200, [&](Rng& rng, double tol) {
    const Distribution d = random::law(rng, {.min_atoms = 1});
    const StepFunction psi = random::step(rng, d, signed_step);
    const PNorm p = random::exponent(rng, Regime::gt1);
    const double x_side = hardy_lower_functional(d, psi, p.value(), tol).value;
    const double u_side = quantile_domain_lhs(d, psi, p, {.quad_tol = tol}).value;
    if (!close(x_side, u_side, 0.0, 2.0 * tol)) {
      return fmt::format("x-domain {} vs u-domain {}; {}", x_side, u_side, describe(d, psi, p.value()));
    }
    return std::string();
  });

  add("classic constant bound via quantiles", 200, [&](Rng& rng, double tol) {
    const Distribution d = random::law(rng);
    const StepFunction psi = random::step(rng, d, signed_step);
    const PNorm p = random::exponent(rng, Regime::gt1);
    const double pv = p.value();
    const double lhs = quantile_domain_lhs(d, psi, p, {.quad_tol = tol}).value;
    const double bound = std::pow(pv / (pv - 1.0), pv) * integrate_power(d, psi, pv);
    if (lhs > bound * (1.0 + 5.0 * tol) + 1e-12) return fmt::format("{} > {}", lhs, bound);
    return std::string();
  });

  add("rearrangement dominance", 100, [&](Rng& rng, double tol) {
    const Distribution d = random::law(rng, {.min_atoms = 0, .max_atoms = 0, .min_segments = 1});
    const StepFunction psi = random::step(rng, d, nonneg_step);
    const PNorm p = random::exponent(rng, Regime::gt1);
    const double before = hardy_lower_functional(d, psi, p.value(), tol).value;
    const StepFunction rearranged = decreasing_rearrangement(compose_with_quantile(d, psi));
    const double after = hardy_lower_functional(Distribution::uniform(0.0, 1.0), rearranged, p.value(), tol).value;
    if (after < before - 5.0 * tol * std::max(1.0, before)) {
      return fmt::format("rearranged {} < original {}; {}", after, before, describe(d, psi, p.value()));
    }
    return std::string();
  });

  add("rearrangement norm and domination", 200, [&](Rng& rng, double) {
    const StepFunction chi = random_unit_step(rng);
    const StepFunction tilde = decreasing_rearrangement(chi);
    const double p = random::uniform(rng, 0.2, 4.0);
    const double n1 = power_integral_unit(chi, p);
    const double n2 = power_integral_unit(tilde, p);
    if (!close(n1, n2, 1e-13)) return fmt::format("p-norms differ: {} vs {}", n1, n2);
    const auto& tv = tilde.values();
    for (std::size_t i = 2; i + 1 < tv.size(); ++i) {
      if (tv[i] > tv[i - 1]) return std::string("rearrangement is not nonincreasing");
    }
    for (int k = 1; k <= 50; ++k) {
      const double u = k <= 25 ? k / 25.0 : random::uniform(rng, 0.0, 1.0);
      const double lhs = integral_to(tilde, u) / u;
      const double rhs = integral_to(chi, u) / u;
      if (lhs < rhs - 1e-10) return fmt::format("domination fails at u={}: {} < {}", u, lhs, rhs);
    }
    return std::string();
  });

  add("stretch_up invariants", 200, [&](Rng& rng, double tol) {
    const Distribution d = random::law(rng, {.min_atoms = 1});
    const StepFunction psi = random::step(rng, d, {.shape = random::Shape::nonincreasing});
    const PNorm p = random::exponent(rng, Regime::gt1);
    const auto& atoms = d.atoms();
    const double a = atoms[static_cast<std::size_t>(random::uniform_int(rng, 0, static_cast<int>(atoms.size()) - 1))].x;
    const TransformOutput t = stretch_up(d, psi, a, p, tol);
    const double pv = p.value();
    if (!close(t.mean_before, t.mean_after, 1e-9, 1e-9) ||
        !close(std::pow(t.norm_before, pv), std::pow(t.norm_after, pv), 1e-9, 1e-9)) {
      return "moments not preserved; " + describe(d, psi, pv);
    }
    if (t.functional_after < t.functional_before - 1e-9 * std::max(1.0, t.functional_before)) {
      return fmt::format("functional decreased {} -> {}; {}", t.functional_before, t.functional_after,
                         describe(d, psi, pv));
    }
    if (!zero_on_support(d, psi)) {
      const double a1 = solve_alpha(d, psi, p).alpha;
      const double a2 = solve_alpha(t.dist, t.psi, p).alpha;
      if (std::abs(a1 - a2) > 1e-9) return fmt::format("alpha moved {} -> {}", a1, a2);
    }
    return std::string();
  });

  add("stretch_down invariants", 200, [&](Rng& rng, double tol) {
    const Distribution d = random::law(rng, {.min_atoms = 1});
    const StepFunction psi = random::step(rng, d, nonneg_step);
    const PNorm p = random::exponent(rng, Regime::lt1);
    const auto& atoms = d.atoms();
    const double a = atoms[static_cast<std::size_t>(random::uniform_int(rng, 0, static_cast<int>(atoms.size()) - 1))].x;
    const TransformOutput t = stretch_down(d, psi, a, p, tol);
    const double pv = p.value();
    if (!close(t.mean_before, t.mean_after, 1e-9, 1e-9) ||
        !close(std::pow(t.norm_before, pv), std::pow(t.norm_after, pv), 1e-9, 1e-9)) {
      return "moments not preserved; " + describe(d, psi, pv);
    }
    if (t.functional_after > t.functional_before + 1e-9 * std::max(1.0, t.functional_after)) {
      return fmt::format("functional increased {} -> {}; {}", t.functional_before, t.functional_after,
                         describe(d, psi, pv));
    }
    return std::string();
  });

  add("atomic laws vs exact enumeration", 200, [&](Rng& rng, double tol) {
    const Distribution d = random::law(rng, {.min_atoms = 1, .max_atoms = 8, .min_segments = 0, .max_segments = 0});
    const StepFunction psi = random::step(rng, d, signed_step);
    const StepFunction a = psi.abs();
    struct Run {
      Functional f;
      PNorm p;
      const StepFunction& psi;
    };
    const PNorm gt = random::exponent(rng, Regime::gt1);
    const PNorm lt = random::exponent(rng, Regime::lt1);
    const PNorm any = random::coin(rng, 0.5) ? gt : lt;
    for (const Run& run : {Run{Functional::hardy_gt1, gt, psi}, Run{Functional::hardy_lt1, lt, a},
                           Run{Functional::copson, any, a}}) {
      const double pv = run.p.value();
      const double exact = exact_discrete_eval(d, run.psi, run.p, run.f);
      double value = 0.0;
      switch (run.f) {
        case Functional::hardy_gt1: value = hardy_lower_functional(d, run.psi, pv, tol).value; break;
        case Functional::hardy_lt1: value = hardy_tail_functional(d, run.psi, pv, tol).value; break;
        case Functional::copson: value = copson_functional(d, run.psi, pv, tol).value; break;
      }
      if (!close(exact, value, 1e-12)) {
        return fmt::format("functional {} exact {} vs {}; {}", static_cast<int>(run.f), exact, value,
                           describe(d, run.psi, pv));
      }
    }
    return std::string();
  });

  add("power-integral identity", 100, [&](Rng& rng, double tol) {
    const Distribution d = random::law(rng, {.min_atoms = 0, .max_atoms = 0, .min_segments = 1});
    const StepFunction psi = random::step(rng, d, nonneg_step);
    const PNorm gt = random::exponent(rng, Regime::gt1);
    const PNorm lt = random::exponent(rng, Regime::lt1);
    const auto lower = power_integral_identity(d, psi, gt, IdentityMode::lower, tol);
    const auto tail = power_integral_identity(d, psi, lt, IdentityMode::tail, tol);
    if (lower.gap > 2.0 * tol) return fmt::format("lower gap {}; {}", lower.gap, describe(d, psi, gt.value()));
    if (tail.gap > 2.0 * tol) return fmt::format("tail gap {}; {}", tail.gap, describe(d, psi, lt.value()));
    return std::string();
  });

  add("identity after de-atomizing", 100, [&](Rng& rng, double tol) {
    const Distribution d = random::law(rng, {.min_atoms = 1, .max_atoms = 4});
    const StepFunction psi = random::step(rng, d, {.shape = random::Shape::nonincreasing});
    const PNorm p = random::exponent(rng, Regime::gt1);
    const TransformOutput t = de_atomize(d, psi, StretchKind::up, p, tol);
    if (!t.dist.is_continuous()) return std::string("atoms left after de-atomizing");
    const auto check = power_integral_identity(t.dist, t.psi, p, IdentityMode::lower, tol);
    if (check.gap > 2.0 * tol) return fmt::format("gap {}; {}", check.gap, describe(t.dist, t.psi, p.value()));
    return std::string();
  });

  return out;
}

void print_suite(std::ostream& os, const std::vector<SuiteCheck>& checks) {
  for (const SuiteCheck& c : checks) {
    os << fmt::format("{:<40} {:>6} cases {:>4} failures\n", c.name, c.cases, c.failures);
    if (c.failures > 0) os << "    first failure: " << c.first_failure << '\n';
  }
}

bool suite_passed(const std::vector<SuiteCheck>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const SuiteCheck& c) { return c.failures == 0; });
}

}  // namespace hardy
