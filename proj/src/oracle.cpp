#include "hardy/oracle.hpp"

#include <cmath>
#include <limits>
#include <random>
#include <string>

#include "hardy/errors.hpp"
#include "hardy/integrate.hpp"
#include "hardy/pieces.hpp"
#include "hardy/quadrature.hpp"

namespace hardy {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double ratio_pow(double num, double den, double p) {
  if (num == 0.0) return 0.0;  // 0/0 := 0
  if (den <= 0.0) return kInf;
  return std::pow(num / den, p);
}

bool needs_nonnegative(Functional f, PNorm p) {
  return f == Functional::hardy_lt1 || (f == Functional::copson && p.regime() == Regime::lt1);
}

}  // namespace

double exact_discrete_eval(const Distribution& d, const StepFunction& psi, PNorm pn, Functional f) {
  if (!d.is_atomic()) throw DomainError("exact_discrete_eval needs a purely atomic law");
  const auto& atoms = d.atoms();
  const std::size_t n = atoms.size();
  if (n > 10'000) throw DomainError("exact_discrete_eval supports at most 10^4 atoms");
  const double p = pn.value();
  std::vector<double> v(n);
  for (std::size_t i = 0; i < n; ++i) {
    v[i] = psi(atoms[i].x);
    if (v[i] < 0.0 && needs_nonnegative(f, pn)) {
      throw DomainError("exact_discrete_eval: psi must be nonnegative for this functional");
    }
    v[i] = std::abs(v[i]);
  }

  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double term = 0.0;
    switch (f) {
      case Functional::hardy_gt1: {
        double num = 0.0;
        double den = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
          if (atoms[j].x <= atoms[i].x) {
            num += v[j] * atoms[j].mass;
            den += atoms[j].mass;
          }
        }
        term = ratio_pow(num, den, p);
        break;
      }
      case Functional::hardy_lt1: {
        double num = 0.0;
        double den = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
          if (atoms[j].x >= atoms[i].x) num += v[j] * atoms[j].mass;
          if (atoms[j].x < atoms[i].x) den += atoms[j].mass;
        }
        term = ratio_pow(num, den, p);
        break;
      }
      case Functional::copson: {
        double inner = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
          if (atoms[j].x < atoms[i].x) continue;
          double cdf_j = 0.0;
          for (std::size_t k = 0; k < n; ++k) {
            if (atoms[k].x <= atoms[j].x) cdf_j += atoms[k].mass;
          }
          inner += v[j] * atoms[j].mass / cdf_j;
        }
        term = inner == 0.0 ? 0.0 : std::pow(inner, p);
        break;
      }
    }
    total += atoms[i].mass * term;
  }
  return total;
}

McEstimate mc_estimate(const Distribution& d, const StepFunction& psi, PNorm pn, Functional f,
                       std::uint64_t seed, std::uint64_t n) {
  if (n < 1000) throw DomainError("mc_estimate needs n >= 1000, got " + std::to_string(n));
  if (needs_nonnegative(f, pn) && !nonnegative_on_support(d, psi)) {
    throw DomainError("mc_estimate: psi must be nonnegative for this functional");
  }
  const double p = pn.value();
  const PartialIntegrals inner(d, psi);
  std::mt19937_64 gen(seed);

  // Welford running moments.
  double mean = 0.0;
  double m2 = 0.0;
  for (std::uint64_t i = 1; i <= n; ++i) {
    const double x = d.quantile(unit_from_bits(gen()));
    double value = 0.0;
    switch (f) {
      case Functional::hardy_gt1:
        value = ratio_pow(inner.below(x), d.cdf(x), p);
        break;
      case Functional::hardy_lt1:
        value = ratio_pow(inner.above(x), d.cdf(x, Side::left), p);
        break;
      case Functional::copson: {
        const double j = inner.above_over_cdf(x);
        value = j == 0.0 ? 0.0 : std::pow(j, p);
        break;
      }
    }
    if (!std::isfinite(value)) return {kInf, kInf, n, seed};
    const double delta = value - mean;
    mean += delta / static_cast<double>(i);
    m2 += delta * (value - mean);
  }
  const double var = n > 1 ? m2 / static_cast<double>(n - 1) : 0.0;
  return {mean, std::sqrt(var / static_cast<double>(n)), n, seed};
}

IdentityCheck power_integral_identity(const Distribution& d, const StepFunction& psi, PNorm pn,
                                      IdentityMode mode, double quad_tol) {
  pn.require(mode == IdentityMode::lower ? Regime::gt1 : Regime::lt1, "power_integral_identity");
  const double p = pn.value();
  const auto pieces = decompose(d, psi.abs());
  const double tol = quad_tol / static_cast<double>(std::max<std::size_t>(1, pieces.size()));

  IdentityCheck out;
  detail::CompensatedSum rhs;
  double inner = 0.0;
  if (mode == IdentityMode::lower) {
    for (const Piece& pc : pieces) {
      if (pc.value == 0.0) continue;
      if (pc.is_atom) {
        inner += pc.value * pc.mass;
        rhs.add(p * std::pow(inner, p - 1.0) * pc.value * pc.mass);
        continue;
      }
      const double start = inner;
      const double c = pc.value;
      const double rho = pc.density();
      auto f = [&](double x) { return std::pow(start + c * rho * (x - pc.lo), p - 1.0) * c * rho; };
      rhs.add(p * integrate_adaptive(f, pc.lo, pc.hi, tol / p, {.smooth_endpoints = true}).value);
      inner += c * pc.mass;
    }
  } else {
    for (auto it = pieces.rbegin(); it != pieces.rend(); ++it) {
      const Piece& pc = *it;
      if (pc.value == 0.0) continue;
      if (pc.is_atom) {
        inner += pc.value * pc.mass;
        rhs.add(p * std::pow(inner, p - 1.0) * pc.value * pc.mass);
        continue;
      }
      const double after = inner;
      const double c = pc.value;
      if (after == 0.0) {
        // Last piece carrying mass: the density (c (F1 - w))^{p-1} is singular
        // at the right end, so use its antiderivative.
        rhs.add(std::pow(c * pc.mass, p));
      } else {
        const double rho = pc.density();
        auto f = [&](double x) { return std::pow(after + c * rho * (pc.hi - x), p - 1.0) * c * rho; };
        rhs.add(p * integrate_adaptive(f, pc.lo, pc.hi, tol / p, {.smooth_endpoints = true}).value);
      }
      inner += c * pc.mass;
    }
  }
  out.lhs = std::pow(inner, p);
  out.rhs = rhs.value();
  out.gap = std::abs(out.lhs - out.rhs);
  return out;
}

}  // namespace hardy
