#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace hardy {

enum class Direction { upper_bound, lower_bound };

const char* to_string(Direction d);

struct Bracket {
  double lower = 0.0;
  double upper = 0.0;
};

/// Seeded Monte Carlo estimate of an un-rooted functional.
struct McEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  std::uint64_t n = 0;
  std::uint64_t seed = 0;

  friend bool operator==(const McEstimate&, const McEstimate&) = default;
};

/// Second comparison reported by the p = 1 bounds: the tail functional
/// against E[psi(X)(1 - F(X-)) / F(X-)].
struct DualBound {
  double lhs = 0.0;
  double bound = 0.0;
  Direction direction = Direction::upper_bound;
  bool satisfied = true;
};

/// Both sides of one inequality evaluation.
///
/// `lhs` and the right-hand sides are in the form the inequality is usually
/// displayed: p-th roots for the integral and probabilistic versions, plain
/// sums for the sequence versions. The *_unrooted fields always hold the
/// p-th powers.
struct VerificationReport {
  std::string theorem;
  double p = 0.0;
  double lhs = 0.0;
  std::optional<double> rhs_sharpened;
  double rhs_classic = 0.0;
  std::optional<double> alpha;
  bool satisfied = true;
  double margin = 0.0;
  double quad_error = 0.0;
  Direction direction = Direction::upper_bound;
  double lhs_unrooted = 0.0;
  double rhs_unrooted = 0.0;
  std::optional<Bracket> lhs_bracket;
  std::optional<DualBound> dual;
  std::optional<McEstimate> mc;
  std::optional<bool> mc_agrees;

  /// rhs_sharpened when present, otherwise rhs_classic.
  double rhs() const { return rhs_sharpened.value_or(rhs_classic); }
};

/// Relative gap in the direction of the inequality: (rhs - lhs)/rhs for upper
/// bounds, (lhs - rhs)/rhs for lower bounds, with rhs floored at 1e-300.
double relative_margin(double lhs, double rhs, Direction direction);

/// Satisfaction tolerance applied to margins: 5 quad_tol + 1e-12.
inline double satisfaction_tolerance(double quad_tol) { return 5.0 * quad_tol + 1e-12; }

}  // namespace hardy
