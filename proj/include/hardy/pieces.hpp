#pragma once

#include <vector>

#include "hardy/distribution.hpp"
#include "hardy/step_function.hpp"

namespace hardy {

/// A maximal part of the support on which the law has a single kind (atom or
/// uniform density) and the step function a single value.
struct Piece {
  bool is_atom = false;
  double lo = 0.0;
  double hi = 0.0;  // == lo for atoms
  double mass = 0.0;
  double value = 0.0;
  double cdf_before = 0.0;  // F(lo-) for atoms, F(lo) for continuous pieces

  double cdf_after() const { return cdf_before + mass; }
  double density() const { return mass / (hi - lo); }
};

/// Splits the support of `d` at the breakpoints of `psi`, in ascending order.
/// Continuous pieces are emitted before an atom on their right endpoint and
/// after an atom on their left endpoint.
std::vector<Piece> decompose(const Distribution& d, const StepFunction& psi);

/// Values of psi along the support in ascending order, compared with no slack.
bool nonincreasing_on_support(const Distribution& d, const StepFunction& psi);
bool nondecreasing_on_support(const Distribution& d, const StepFunction& psi);
bool nonnegative_on_support(const Distribution& d, const StepFunction& psi);
bool zero_on_support(const Distribution& d, const StepFunction& psi);

}  // namespace hardy
