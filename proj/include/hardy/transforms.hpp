#pragma once

#include "hardy/distribution.hpp"
#include "hardy/pnorm.hpp"
#include "hardy/step_function.hpp"

namespace hardy {

/// Result of a stretch. Norms are (integral |psi|^p dF)^(1/p); means are
/// integral |psi| dF; functionals are the un-rooted Hardy functional the
/// stretch is meant to move monotonically (lower functional for stretch_up,
/// tail functional for stretch_down).
struct TransformOutput {
  Distribution dist;
  StepFunction psi;
  double norm_before = 0.0;
  double norm_after = 0.0;
  double mean_before = 0.0;
  double mean_after = 0.0;
  double functional_before = 0.0;
  double functional_after = 0.0;
};

enum class StretchKind { up, down };

/// Nonincreasing rearrangement on [0, 1] of a nonnegative step function,
/// built by sorting its pieces on [0, 1] by value. The result is zero outside
/// [0, 1].
StepFunction decreasing_rearrangement(const StepFunction& chi);

/// Replaces the atom at `atom_location` by a unit-density segment starting at
/// the atom and shifts everything above it to the right by the atom's mass.
/// psi must be nonnegative and nonincreasing on the support.
TransformOutput stretch_up(const Distribution& d, const StepFunction& psi, double atom_location,
                           PNorm p, double quad_tol = 1e-10);

/// Replaces the atom by a unit-density segment ending at the atom and shifts
/// everything below it to the left by the atom's mass. psi must be
/// nonnegative on the support.
TransformOutput stretch_down(const Distribution& d, const StepFunction& psi, double atom_location,
                             PNorm p, double quad_tol = 1e-10);

/// Repeats the chosen stretch on the lowest remaining atom until the law is
/// atom-free.
TransformOutput de_atomize(const Distribution& d, const StepFunction& psi, StretchKind kind,
                           PNorm p, double quad_tol = 1e-10);

/// psi(F^{-1}(v)) as a step function of v on [0, 1] (zero outside), using |psi|.
StepFunction compose_with_quantile(const Distribution& d, const StepFunction& psi);

}  // namespace hardy
