#pragma once

#include <cstdint>

#include "hardy/distribution.hpp"
#include "hardy/pnorm.hpp"
#include "hardy/report.hpp"
#include "hardy/step_function.hpp"

namespace hardy {

enum class Functional { hardy_gt1, hardy_lt1, copson };

/// Brute-force nested sums of an un-rooted functional over a purely atomic
/// law (at most 10^4 atoms), in ascending atom order.
double exact_discrete_eval(const Distribution& d, const StepFunction& psi, PNorm p, Functional f);

/// Monte Carlo over the outer variable X only; the conditional inner
/// expectation is exact.
McEstimate mc_estimate(const Distribution& d, const StepFunction& psi, PNorm p, Functional f,
                       std::uint64_t seed, std::uint64_t n);

enum class IdentityMode { lower, tail };

struct IdentityCheck {
  double lhs = 0.0;
  double rhs = 0.0;
  double gap = 0.0;
};

/// Both sides of [int psi dF]^p = p int [inner(y)]^{p-1} psi(y) dF(y), where
/// inner is the cumulative integral over (-inf, y] (lower, p > 1) or the tail
/// integral over [y, inf) (tail, 0 < p < 1). Holds for atom-free laws only.
IdentityCheck power_integral_identity(const Distribution& d, const StepFunction& psi, PNorm p,
                                      IdentityMode mode, double quad_tol = 1e-10);

}  // namespace hardy
