#include "hardy/functionals.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "hardy/alpha_solver.hpp"
#include "hardy/errors.hpp"
#include "hardy/pieces.hpp"
#include "hardy/quadrature.hpp"
#include "kernels.hpp"

namespace hardy {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double root(double v, double p) { return std::isfinite(v) ? std::pow(v, 1.0 / p) : v; }

std::size_t continuous_count(const std::vector<Piece>& pieces) {
  return std::max<std::size_t>(
      1, std::count_if(pieces.begin(), pieces.end(), [](const Piece& pc) { return !pc.is_atom; }));
}

void finish(VerificationReport& r, double quad_tol) {
  r.margin = relative_margin(r.lhs, r.rhs(), r.direction);
  r.satisfied = r.margin >= -satisfaction_tolerance(quad_tol);
}

void require_nonnegative(const Distribution& d, const StepFunction& psi, const char* who) {
  if (!nonnegative_on_support(d, psi)) {
    throw DomainError(std::string(who) + " requires psi >= 0 on the support");
  }
}

}  // namespace

SequenceInput::SequenceInput(std::vector<double> terms, Tail tail, double tail_bound)
    : terms_(std::move(terms)), tail_(tail), tail_bound_(tail_bound) {
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (!std::isfinite(terms_[i]) || terms_[i] < 0.0) {
      throw ValidationError("terms[" + std::to_string(i) + "] must be finite and nonnegative");
    }
  }
  if (tail_ == Tail::truncated && !(tail_bound_ >= 0.0 && std::isfinite(tail_bound_))) {
    throw ValidationError("a truncated sequence needs a finite nonnegative tail_bound");
  }
  if (tail_ == Tail::zeros) tail_bound_ = 0.0;
}

std::size_t SequenceInput::support_length() const {
  std::size_t n = terms_.size();
  while (n > 0 && terms_[n - 1] == 0.0) --n;
  return n;
}

Integral hardy_lower_functional(const Distribution& d, const StepFunction& psi, double p,
                                double quad_tol) {
  const auto pieces = decompose(d, psi.abs());
  const double tol = quad_tol / static_cast<double>(continuous_count(pieces));
  detail::CompensatedSum total;
  double err = 0.0;
  double below = 0.0;  // integral of |psi| dF up to the current piece
  for (const Piece& pc : pieces) {
    if (pc.is_atom) {
      below += pc.value * pc.mass;
      total.add(pc.mass * kernels::nonneg_pow(below / pc.cdf_after(), p));
    } else {
      const Integral k = kernels::lower(pc.cdf_before, pc.cdf_after(), below, pc.value, p, tol);
      total.add(k.value);
      err += k.abs_error;
      below += pc.value * pc.mass;
    }
  }
  return {total.value(), err};
}

Integral hardy_tail_functional(const Distribution& d, const StepFunction& psi, double p,
                               double quad_tol) {
  const auto pieces = decompose(d, psi.abs());
  const double tol = quad_tol / static_cast<double>(continuous_count(pieces));
  detail::CompensatedSum total;
  double err = 0.0;
  double above = 0.0;  // integral of |psi| dF beyond the current piece
  for (auto it = pieces.rbegin(); it != pieces.rend(); ++it) {
    const Piece& pc = *it;
    if (pc.is_atom) {
      above += pc.value * pc.mass;
      if (above == 0.0) continue;
      if (pc.cdf_before <= 0.0) return {kInf, err};
      total.add(pc.mass * std::pow(above / pc.cdf_before, p));
    } else {
      const Integral k = kernels::tail(pc.cdf_before, pc.cdf_after(), above, pc.value, p, tol);
      if (!std::isfinite(k.value)) return {kInf, err};
      total.add(k.value);
      err += k.abs_error;
      above += pc.value * pc.mass;
    }
  }
  return {total.value(), err};
}

Integral copson_functional(const Distribution& d, const StepFunction& psi, double p,
                           double quad_tol) {
  const auto pieces = decompose(d, psi.abs());
  const double tol = quad_tol / static_cast<double>(continuous_count(pieces));
  detail::CompensatedSum total;
  double err = 0.0;
  double inner = 0.0;  // integral of |psi|/F dF beyond the current piece
  for (auto it = pieces.rbegin(); it != pieces.rend(); ++it) {
    const Piece& pc = *it;
    if (pc.is_atom) {
      inner += pc.value * pc.mass / pc.cdf_after();
      total.add(pc.mass * kernels::nonneg_pow(inner, p));
    } else {
      const Integral k = kernels::copson(pc.cdf_before, pc.cdf_after(), inner, pc.value, p, tol);
      total.add(k.value);
      err += k.abs_error;
      if (pc.value > 0.0) {
        inner += pc.cdf_before > 0.0 ? pc.value * std::log1p(pc.mass / pc.cdf_before) : kInf;
      }
    }
  }
  return {total.value(), err};
}

VerificationReport eval_hardy_gt1(const Distribution& d, const StepFunction& psi, PNorm pn,
                                  const EvalOptions& opts) {
  pn.require(Regime::gt1, "eval_hardy_gt1");
  const double p = pn.value();
  VerificationReport r;
  r.theorem = "hardy-gt1";
  r.p = p;
  r.direction = Direction::upper_bound;
  if (zero_on_support(d, psi)) {
    finish(r, opts.quad_tol);
    return r;
  }
  const Integral lhs = hardy_lower_functional(d, psi, p, opts.quad_tol);
  const AlphaResult a = solve_alpha(d, psi, pn);
  r.lhs_unrooted = lhs.value;
  r.lhs = root(lhs.value, p);
  r.quad_error = lhs.abs_error;
  r.alpha = a.alpha;
  r.rhs_sharpened = p / (p - 1.0 + a.alpha) * a.mp;
  r.rhs_classic = p / (p - 1.0) * a.mp;
  r.rhs_unrooted = std::pow(*r.rhs_sharpened, p);
  finish(r, opts.quad_tol);
  return r;
}

VerificationReport eval_hardy_lt1(const Distribution& d, const StepFunction& psi, PNorm pn,
                                  const EvalOptions& opts) {
  pn.require(Regime::lt1, "eval_hardy_lt1");
  require_nonnegative(d, psi, "eval_hardy_lt1");
  const double p = pn.value();
  VerificationReport r;
  r.theorem = "hardy-lt1";
  r.p = p;
  r.direction = Direction::lower_bound;
  const Integral lhs = hardy_tail_functional(d, psi, p, opts.quad_tol);
  const double mp = std::pow(integrate_power(d, psi, p), 1.0 / p);
  r.lhs_unrooted = lhs.value;
  r.lhs = root(lhs.value, p);
  r.quad_error = lhs.abs_error;
  r.rhs_classic = p / (1.0 - p) * mp;
  r.rhs_unrooted = std::pow(r.rhs_classic, p);
  finish(r, opts.quad_tol);
  return r;
}

VerificationReport eval_copson(const Distribution& d, const StepFunction& psi, PNorm pn,
                               const EvalOptions& opts) {
  const double p = pn.value();
  VerificationReport r;
  r.theorem = "copson";
  r.p = p;
  if (pn.regime() == Regime::lt1) {
    require_nonnegative(d, psi, "eval_copson with 0 < p < 1");
    r.direction = Direction::lower_bound;
  } else {
    r.direction = Direction::upper_bound;
  }
  const Integral lhs = copson_functional(d, psi, p, opts.quad_tol);
  const double mp = std::pow(integrate_power(d, psi, p), 1.0 / p);
  r.lhs_unrooted = lhs.value;
  r.lhs = root(lhs.value, p);
  r.quad_error = lhs.abs_error;
  r.rhs_classic = p * mp;
  r.rhs_unrooted = std::pow(r.rhs_classic, p);
  finish(r, opts.quad_tol);
  return r;
}

VerificationReport eval_classic_integral(const StepFunction& psi, PNorm pn, Regime regime,
                                         const EvalOptions& opts) {
  if (regime == Regime::eq1) throw DomainError("classic integral inequality has no p = 1 form");
  pn.require(regime, "eval_classic_integral");
  const double p = pn.value();
  if (psi.values().back() != 0.0) {
    throw DomainError("classic integral inequality needs psi with compact support (last value must be 0)");
  }
  // Cut points on [0, L], L the last breakpoint.
  std::vector<double> cuts{0.0};
  for (double b : psi.breakpoints()) {
    if (b > 0.0) cuts.push_back(b);
  }
  std::vector<double> values;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    values.push_back(psi(cuts[i]));
    if (values.back() < 0.0) throw DomainError("classic integral inequality requires psi >= 0 on (0, inf)");
  }
  const std::size_t n = values.size();
  const double tol = opts.quad_tol / static_cast<double>(std::max<std::size_t>(n, 1) + 1);

  VerificationReport r;
  r.p = p;
  detail::CompensatedSum lhs;
  detail::CompensatedSum norm;
  double err = 0.0;
  for (std::size_t i = 0; i < n; ++i) norm.add(kernels::nonneg_pow(values[i], p) * (cuts[i + 1] - cuts[i]));

  if (regime == Regime::gt1) {
    r.theorem = "classic-integral-gt1";
    r.direction = Direction::upper_bound;
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const Integral k = kernels::lower(cuts[i], cuts[i + 1], acc, values[i], p, tol);
      lhs.add(k.value);
      err += k.abs_error;
      acc += values[i] * (cuts[i + 1] - cuts[i]);
    }
    // Beyond L the inner integral is constant, so the integrand is acc^p x^{-p}.
    if (acc > 0.0) lhs.add(std::pow(acc, p) * std::pow(cuts.back(), 1.0 - p) / (p - 1.0));
    r.rhs_classic = p / (p - 1.0) * root(norm.value(), p);
  } else {
    r.theorem = "classic-integral-lt1";
    r.direction = Direction::lower_bound;
    double acc = 0.0;
    for (std::size_t i = n; i-- > 0;) {
      const Integral k = kernels::tail(cuts[i], cuts[i + 1], acc, values[i], p, tol);
      lhs.add(k.value);
      err += k.abs_error;
      acc += values[i] * (cuts[i + 1] - cuts[i]);
    }
    r.rhs_classic = p / (1.0 - p) * root(norm.value(), p);
  }
  r.lhs_unrooted = lhs.value();
  r.lhs = root(r.lhs_unrooted, p);
  r.rhs_unrooted = std::pow(r.rhs_classic, p);
  r.quad_error = err;
  finish(r, opts.quad_tol);
  return r;
}

VerificationReport eval_discrete(const SequenceInput& seq, PNorm pn, Regime regime,
                                 const EvalOptions& opts) {
  if (seq.terms().empty()) throw DomainError("eval_discrete: empty sequence");
  if (regime == Regime::eq1) throw DomainError("discrete Hardy inequality has no p = 1 form");
  pn.require(regime, "eval_discrete");
  const double p = pn.value();
  const auto& c = seq.terms();
  const std::size_t N = c.size();

  VerificationReport r;
  r.p = p;
  detail::CompensatedSum norm;
  for (double v : c) norm.add(kernels::nonneg_pow(v, p));

  if (regime == Regime::gt1) {
    r.theorem = "discrete-gt1";
    r.direction = Direction::upper_bound;
    const double constant = std::pow(p / (p - 1.0), p);
    r.rhs_classic = constant * norm.value();
    const std::size_t M = std::max(N, opts.discrete_terms);
    detail::CompensatedSum low;
    detail::CompensatedSum high;
    double partial = 0.0;
    for (std::size_t n = 1; n <= N; ++n) {
      partial += c[n - 1];
      const double term = kernels::nonneg_pow(partial / static_cast<double>(n), p);
      low.add(term);
      high.add(term);
    }
    // Beyond the listed terms the running sum is `partial` (zeros) or at most
    // partial + tail_bound (truncated).
    const double s_low = partial;
    const double s_high = partial + seq.tail_bound();
    const double lp = kernels::nonneg_pow(s_low, p);
    const double hp = kernels::nonneg_pow(s_high, p);
    if (hp > 0.0) {
      for (std::size_t n = M; n > N; --n) {
        const double w = std::pow(static_cast<double>(n), -p);
        low.add(lp * w);
        high.add(hp * w);
      }
      // sum_{n > M} n^{-p} lies between the integrals over [M+1, inf) and [M, inf).
      const double Md = static_cast<double>(M);
      low.add(lp * std::pow(Md + 1.0, 1.0 - p) / (p - 1.0));
      high.add(hp * std::pow(Md, 1.0 - p) / (p - 1.0));
    }
    r.lhs_bracket = Bracket{low.value(), high.value()};
    r.lhs = 0.5 * (low.value() + high.value());
    r.lhs_unrooted = r.lhs;
    r.rhs_unrooted = r.rhs_classic;
    r.quad_error = 0.5 * (high.value() - low.value());
    // Conservative side of the bracket.
    r.margin = relative_margin(high.value(), r.rhs_classic, r.direction);
    r.satisfied = r.margin >= -satisfaction_tolerance(opts.quad_tol);
    return r;
  }

  if (seq.tail() == SequenceInput::Tail::truncated) {
    throw DomainError("the 0 < p < 1 discrete inequality needs an exactly known sequence (tail = zeros)");
  }
  r.theorem = "discrete-lt1";
  r.direction = Direction::lower_bound;
  r.rhs_classic = std::pow(p / (1.0 - p), p) * norm.value();
  // Suffix sums sum_{h >= j} a_h.
  std::vector<double> suffix(N + 1, 0.0);
  for (std::size_t j = N; j-- > 0;) suffix[j] = suffix[j + 1] + c[j];
  detail::CompensatedSum lhs;
  lhs.add((1.0 + 1.0 / (1.0 - p)) * kernels::nonneg_pow(suffix[0], p));
  for (std::size_t j = 2; j <= N; ++j) {
    lhs.add(kernels::nonneg_pow(suffix[j - 1] / static_cast<double>(j), p));
  }
  r.lhs = lhs.value();
  r.lhs_unrooted = r.lhs;
  r.rhs_unrooted = r.rhs_classic;
  finish(r, opts.quad_tol);
  return r;
}

VerificationReport eval_p1_bounds(const Distribution& d, const StepFunction& psi,
                                  Monotonicity direction, const EvalOptions& opts) {
  if (!nonnegative_on_support(d, psi)) throw PreconditionError("eval_p1_bounds requires psi >= 0");
  const bool up = direction == Monotonicity::nondecreasing;
  if (up ? !nondecreasing_on_support(d, psi) : !nonincreasing_on_support(d, psi)) {
    throw PreconditionError(std::string("eval_p1_bounds: psi is not ") +
                            (up ? "nondecreasing" : "nonincreasing") + " on the support");
  }
  VerificationReport r;
  r.theorem = "p1-bounds";
  r.p = 1.0;
  r.direction = up ? Direction::upper_bound : Direction::lower_bound;
  const Integral lhs = hardy_lower_functional(d, psi, 1.0, opts.quad_tol);
  r.lhs = r.lhs_unrooted = lhs.value;
  r.quad_error = lhs.abs_error;
  r.rhs_classic = r.rhs_unrooted = integrate_power(d, psi, 1.0);
  finish(r, opts.quad_tol);

  // Tail functional against E[psi(X)(1 - F(X-))/F(X-)]: T(x) >= psi(x) P(Y >= x)
  // for nondecreasing psi and <= for nonincreasing psi.
  DualBound dual;
  dual.direction = up ? Direction::lower_bound : Direction::upper_bound;
  dual.lhs = hardy_tail_functional(d, psi, 1.0, opts.quad_tol).value;
  detail::CompensatedSum bound;
  bool infinite = false;
  for (const Piece& pc : decompose(d, psi)) {
    if (pc.value == 0.0) continue;
    const double F0 = pc.cdf_before;
    if (F0 <= 0.0) {
      infinite = true;
      continue;
    }
    if (pc.is_atom) {
      bound.add(pc.value * (1.0 - F0) / F0 * pc.mass);
    } else {
      bound.add(pc.value * (std::log1p(pc.mass / F0) - pc.mass));
    }
  }
  dual.bound = infinite ? kInf : bound.value();
  if (std::isinf(dual.lhs) && std::isinf(dual.bound)) {
    dual.satisfied = true;
  } else {
    dual.satisfied = relative_margin(dual.lhs, dual.bound, dual.direction) >=
                     -satisfaction_tolerance(opts.quad_tol);
  }
  r.dual = dual;
  return r;
}

Integral quantile_domain_lhs(const Distribution& d, const StepFunction& psi, PNorm pn,
                             const EvalOptions& opts) {
  pn.require(Regime::gt1, "quantile_domain_lhs");
  const double p = pn.value();
  const StepFunction a = psi.abs();

  // Levels u where G = F o F^{-1} or psi o F^{-1} can change.
  std::vector<double> levels{0.0, 1.0};
  for (const Component& c : d.components()) {
    levels.push_back(c.mass_before);
    levels.push_back(std::min(1.0, c.mass_before + c.mass));
  }
  for (const Segment& s : d.segments()) {
    for (double b : a.breakpoints()) {
      if (b > s.lo && b < s.hi) levels.push_back(d.cdf(b));
    }
  }
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());

  // chi(v) = psi(F^{-1}(v)) on each level interval, and its running integral.
  const std::size_t n = levels.size() - 1;
  std::vector<double> chi(n);
  std::vector<double> running(n + 1, 0.0);
  for (std::size_t k = 0; k < n; ++k) {
    chi[k] = a(d.quantile(0.5 * (levels[k] + levels[k + 1])));
    running[k + 1] = running[k] + chi[k] * (levels[k + 1] - levels[k]);
  }
  auto integral_to = [&](double s) {
    const auto it = std::upper_bound(levels.begin(), levels.end(), s);
    const std::size_t k = std::min<std::size_t>(std::max<std::ptrdiff_t>(it - levels.begin(), 1) - 1, n - 1);
    return running[k] + chi[k] * (s - levels[k]);
  };
  auto integrand = [&](double u) {
    if (u <= 0.0) u = std::numeric_limits<double>::min();
    const double g = d.cdf(d.quantile(std::min(u, 1.0)));
    return kernels::nonneg_pow(integral_to(g) / g, p);
  };

  Integral out;
  detail::CompensatedSum total;
  const double tol = opts.quad_tol / static_cast<double>(n);
  for (std::size_t k = 0; k < n; ++k) {
    const auto q = integrate_adaptive(integrand, levels[k], levels[k + 1], tol);
    total.add(q.value);
    out.abs_error += q.abs_error;
  }
  out.value = total.value();
  return out;
}

}  // namespace hardy
