#include "hardy/alpha_solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "hardy/errors.hpp"
#include "hardy/integrate.hpp"
#include "hardy/pieces.hpp"
#include "hardy/quadrature.hpp"

namespace hardy {

double alpha_equation(double alpha, double m1, double mp, double p) {
  return m1 * (p - 1.0 + alpha) - p * mp * std::pow(alpha, 1.0 / p);
}

AlphaResult solve_alpha(double m1, double mp, PNorm pn) {
  pn.require(Regime::gt1, "solve_alpha");
  const double p = pn.value();
  if (!(m1 > 0.0)) throw PreconditionError("solve_alpha: psi vanishes on the support");
  if (!std::isfinite(mp)) {
    throw DomainError("solve_alpha: psi is not p-integrable; the inequality is trivial");
  }

  AlphaResult r;
  r.m1 = m1;
  r.mp = mp;
  if (mp - m1 < 1e-14 * m1) {
    r.alpha = 1.0;
    r.residual = alpha_equation(1.0, m1, mp, p);
    return r;
  }

  auto g = [&](double a) { return alpha_equation(a, m1, mp, p); };
  // g(0) = m1 (p - 1) > 0 and g(1) = p (m1 - mp) < 0 by the power-mean inequality.
  double lo = 0.0;
  double hi = 1.0;
  double x = 0.5;
  double best = x;
  double best_abs = std::numeric_limits<double>::infinity();
  for (int it = 1; it <= 400; ++it) {
    r.iterations = it;
    const double gx = g(x);
    if (std::abs(gx) < best_abs) {
      best_abs = std::abs(gx);
      best = x;
    }
    if (gx == 0.0) break;
    (gx > 0.0 ? lo : hi) = x;

    // g' = m1 - mp alpha^(1/p - 1) is unbounded near 0, so Newton is only
    // taken when it lands strictly inside the bracket.
    const double slope = m1 - mp * std::pow(x, 1.0 / p - 1.0);
    double next = 0.5 * (lo + hi);
    if (slope != 0.0 && std::isfinite(slope)) {
      const double newton = x - gx / slope;
      if (newton > lo && newton < hi) next = newton;
    }
    const bool narrow = hi - lo <= 1e-14 || hi - lo <= 4.0 * std::numeric_limits<double>::epsilon() * hi;
    if (narrow && std::abs(next - x) <= 4.0 * std::numeric_limits<double>::epsilon() * std::max(x, 1e-300)) {
      break;
    }
    if (next == x) break;
    x = next;
  }
  r.alpha = std::clamp(best, 0.0, 1.0);
  r.residual = g(r.alpha);
  return r;
}

AlphaResult solve_alpha(const Distribution& d, const StepFunction& psi, PNorm p) {
  const double m1 = integrate_power(d, psi, 1.0);
  const double mp = std::pow(integrate_power(d, psi, p.value()), 1.0 / p.value());
  return solve_alpha(m1, mp, p);
}

double alpha_closed_p2(const Distribution& d, const StepFunction& psi) {
  const double m1 = integrate_power(d, psi, 1.0);
  if (!(m1 > 0.0)) throw PreconditionError("alpha_closed_p2: psi vanishes on the support");
  const double second = integrate_power(d, psi, 2.0);
  // Variance from centred terms rather than E psi^2 - m1^2.
  detail::CompensatedSum var;
  for (const Piece& piece : decompose(d, psi)) {
    const double dev = std::abs(piece.value) - m1;
    var.add(dev * dev * piece.mass);
  }
  const double root = std::sqrt(second) - std::sqrt(std::max(var.value(), 0.0));
  return std::min(1.0, root * root / (m1 * m1));
}

}  // namespace hardy
