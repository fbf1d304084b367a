#pragma once

#include <functional>
#include <span>
#include <vector>

namespace hardy {

/// Right-continuous piecewise-constant function on the real line.
///
/// With breakpoints b_1 < ... < b_m the function takes values[0] on
/// (-inf, b_1), values[i] on [b_i, b_{i+1}) and values[m] on [b_m, inf).
class StepFunction {
 public:
  StepFunction(std::vector<double> breakpoints, std::vector<double> values);

  static StepFunction constant(double c);

  /// Builds a step function on the given (sorted, deduplicated) cut points by
  /// sampling `f` at an interior point of each interval, then merges equal
  /// neighbours.
  static StepFunction sampled(std::vector<double> cuts, const std::function<double(double)>& f);

  double operator()(double x) const;

  const std::vector<double>& breakpoints() const { return breakpoints_; }
  const std::vector<double>& values() const { return values_; }
  std::size_t pieces() const { return values_.size(); }

  bool is_nonnegative() const;
  bool is_zero() const;

  StepFunction abs() const;
  StepFunction scaled(double factor) const;

  /// Drops breakpoints that separate equal values.
  StepFunction canonical() const;

  friend bool operator==(const StepFunction&, const StepFunction&) = default;

 private:
  std::vector<double> breakpoints_;
  std::vector<double> values_;
};

}  // namespace hardy
