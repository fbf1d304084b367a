#pragma once

#include <cstddef>
#include <vector>

#include "hardy/distribution.hpp"
#include "hardy/integrate.hpp"
#include "hardy/pnorm.hpp"
#include "hardy/report.hpp"
#include "hardy/step_function.hpp"

namespace hardy {

struct EvalOptions {
  double quad_tol = 1e-10;
  /// Terms summed explicitly by the discrete p > 1 evaluator before the
  /// closed-form tail bracket takes over.
  std::size_t discrete_terms = 1'000'000;
};

/// Nonnegative sequence for the discrete inequalities. A truncated sequence
/// carries an upper bound on the sum of the omitted terms.
class SequenceInput {
 public:
  enum class Tail { zeros, truncated };

  explicit SequenceInput(std::vector<double> terms, Tail tail = Tail::zeros, double tail_bound = 0.0);

  const std::vector<double>& terms() const { return terms_; }
  Tail tail() const { return tail_; }
  double tail_bound() const { return tail_bound_; }
  /// Index (1-based) of the last nonzero term; 0 if all terms vanish.
  std::size_t support_length() const;

 private:
  std::vector<double> terms_;
  Tail tail_;
  double tail_bound_;
};

enum class Monotonicity { nondecreasing, nonincreasing };

// Un-rooted functionals for any p > 0. |psi| is used throughout.

/// E[(E(psi(Y) 1[Y <= X] | X) / F(X))^p].
Integral hardy_lower_functional(const Distribution& d, const StepFunction& psi, double p,
                                double quad_tol = 1e-10);
/// E[(E(psi(Y) 1[Y >= X] | X) / F(X-))^p] with 0/0 = 0 and c/0 = inf.
Integral hardy_tail_functional(const Distribution& d, const StepFunction& psi, double p,
                               double quad_tol = 1e-10);
/// E[(E(psi(Y)/F(Y) 1[Y >= X] | X))^p].
Integral copson_functional(const Distribution& d, const StepFunction& psi, double p,
                           double quad_tol = 1e-10);

/// Sharpened probabilistic Hardy inequality, p > 1.
VerificationReport eval_hardy_gt1(const Distribution& d, const StepFunction& psi, PNorm p,
                                  const EvalOptions& opts = {});
/// Probabilistic Hardy lower bound, 0 < p < 1, psi >= 0.
VerificationReport eval_hardy_lt1(const Distribution& d, const StepFunction& psi, PNorm p,
                                  const EvalOptions& opts = {});
/// Probabilistic Copson inequality: upper bound for p >= 1, lower bound for
/// 0 < p < 1 (psi >= 0).
VerificationReport eval_copson(const Distribution& d, const StepFunction& psi, PNorm p,
                               const EvalOptions& opts = {});
/// Integral Hardy inequality on (0, inf): inner average from 0 for p > 1,
/// inner tail average for 0 < p < 1. psi must vanish beyond its last
/// breakpoint; values left of 0 are ignored.
VerificationReport eval_classic_integral(const StepFunction& psi, PNorm p, Regime regime,
                                         const EvalOptions& opts = {});
/// Sequence Hardy inequality (p > 1) or its 0 < p < 1 counterpart.
VerificationReport eval_discrete(const SequenceInput& seq, PNorm p, Regime regime,
                                 const EvalOptions& opts = {});
/// p = 1 comparison of E[I(X)/F(X)] with E[psi(X)] for monotone psi >= 0,
/// plus the dual tail bound.
VerificationReport eval_p1_bounds(const Distribution& d, const StepFunction& psi,
                                  Monotonicity direction, const EvalOptions& opts = {});

/// The lower Hardy functional evaluated on the quantile scale,
/// integral_0^1 [integral_0^{G(u)} psi(F^{-1}(v)) dv / G(u)]^p du with
/// G = F o F^{-1}. Shares no code path with hardy_lower_functional beyond the
/// quadrature rule.
Integral quantile_domain_lhs(const Distribution& d, const StepFunction& psi, PNorm p,
                             const EvalOptions& opts = {});

}  // namespace hardy
