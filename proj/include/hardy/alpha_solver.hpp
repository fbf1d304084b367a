#pragma once

#include "hardy/distribution.hpp"
#include "hardy/pnorm.hpp"
#include "hardy/step_function.hpp"

namespace hardy {

/// Root of the sharpened-constant equation together with the moments it was
/// computed from.
struct AlphaResult {
  double alpha = 1.0;
  double residual = 0.0;
  double m1 = 0.0;  // E|psi(Y)|
  double mp = 0.0;  // (E|psi(Y)|^p)^(1/p)
  int iterations = 0;
};

/// g(alpha) = m1 (p - 1 + alpha) - p mp alpha^(1/p). Convex on [0, inf),
/// g(0) >= 0 and g(1) <= 0 whenever mp >= m1.
double alpha_equation(double alpha, double m1, double mp, double p);

/// Unique root of alpha_equation on [0, 1] by safeguarded Newton/bisection.
/// Returns alpha = 1 exactly when mp - m1 < 1e-14 m1.
AlphaResult solve_alpha(double m1, double mp, PNorm p);
AlphaResult solve_alpha(const Distribution& d, const StepFunction& psi, PNorm p);

/// Closed form valid for p = 2:
/// (sqrt(E psi^2) - sqrt(var |psi|))^2 / (E |psi|)^2.
double alpha_closed_p2(const Distribution& d, const StepFunction& psi);

}  // namespace hardy
