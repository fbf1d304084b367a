#pragma once

#include <functional>
#include <vector>

#include "hardy/distribution.hpp"
#include "hardy/pieces.hpp"
#include "hardy/step_function.hpp"

namespace hardy {

struct Integral {
  double value = 0.0;
  double abs_error = 0.0;
};

/// Integral of a pointwise function against d. Atoms are summed in ascending
/// order without compensation; segments use adaptive Gauss-Legendre, split at
/// `cuts`. g must be smooth between cuts: a jump the quadrature nodes straddle
/// cannot be detected. A non-finite value of g on a positive-mass region makes
/// the result +inf.
Integral integrate(const Distribution& d, const std::function<double(double)>& g,
                   double quad_tol = 1e-10, const std::vector<double>& cuts = {});

/// Exact integral of |psi|^power against d (a finite sum over pieces).
double integrate_power(const Distribution& d, const StepFunction& psi, double power);

/// Half-line integrals of |psi| against d, answered in O(log n) from prefix
/// and suffix tables.
class PartialIntegrals {
 public:
  PartialIntegrals(const Distribution& d, const StepFunction& psi);

  /// Integral of |psi| dF over (-inf, x].
  double below(double x) const;
  /// Integral of |psi| dF over [x, inf).
  double above(double x) const;
  /// Integral of |psi| / F dF over [x, inf); +inf when it diverges.
  double above_over_cdf(double x) const;

  double total() const { return prefix_.back(); }

 private:
  std::vector<Piece> pieces_;
  std::vector<double> prefix_;        // prefix_[k] = sum over pieces [0, k)
  std::vector<double> suffix_;        // suffix_[k] = sum over pieces [k, n)
  std::vector<double> suffix_ratio_;  // suffix of |psi|/F dF
};

}  // namespace hardy
