#include "hardy/step_function.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hardy/errors.hpp"

namespace hardy {

StepFunction::StepFunction(std::vector<double> breakpoints, std::vector<double> values)
    : breakpoints_(std::move(breakpoints)), values_(std::move(values)) {
  if (values_.size() != breakpoints_.size() + 1) {
    throw ValidationError("step function needs exactly one more value than breakpoints (got " +
                          std::to_string(breakpoints_.size()) + " breakpoints, " +
                          std::to_string(values_.size()) + " values)");
  }
  for (std::size_t i = 0; i < breakpoints_.size(); ++i) {
    if (!std::isfinite(breakpoints_[i])) {
      throw ValidationError("breakpoints[" + std::to_string(i) + "] is not finite");
    }
    if (i > 0 && !(breakpoints_[i] > breakpoints_[i - 1])) {
      throw ValidationError("breakpoints must be strictly increasing (index " + std::to_string(i) +
                            ")");
    }
  }
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!std::isfinite(values_[i])) {
      throw ValidationError("values[" + std::to_string(i) + "] is not finite");
    }
  }
}

StepFunction StepFunction::constant(double c) { return StepFunction({}, {c}); }

StepFunction StepFunction::sampled(std::vector<double> cuts,
                                   const std::function<double(double)>& f) {
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  std::vector<double> values;
  values.reserve(cuts.size() + 1);
  if (cuts.empty()) {
    values.push_back(f(0.0));
  } else {
    values.push_back(f(cuts.front() - 1.0));
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
      values.push_back(f(0.5 * (cuts[i] + cuts[i + 1])));
    }
    values.push_back(f(cuts.back() + 1.0));
  }
  return StepFunction(std::move(cuts), std::move(values)).canonical();
}

double StepFunction::operator()(double x) const {
  const auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), x);
  return values_[static_cast<std::size_t>(it - breakpoints_.begin())];
}

bool StepFunction::is_nonnegative() const {
  return std::all_of(values_.begin(), values_.end(), [](double v) { return v >= 0.0; });
}

bool StepFunction::is_zero() const {
  return std::all_of(values_.begin(), values_.end(), [](double v) { return v == 0.0; });
}

StepFunction StepFunction::abs() const {
  std::vector<double> v(values_);
  for (double& x : v) x = std::abs(x);
  return StepFunction(breakpoints_, std::move(v));
}

StepFunction StepFunction::scaled(double factor) const {
  std::vector<double> v(values_);
  for (double& x : v) x *= factor;
  return StepFunction(breakpoints_, std::move(v));
}

StepFunction StepFunction::canonical() const {
  std::vector<double> bps;
  std::vector<double> vals{values_.front()};
  for (std::size_t i = 0; i < breakpoints_.size(); ++i) {
    if (values_[i + 1] != vals.back()) {
      bps.push_back(breakpoints_[i]);
      vals.push_back(values_[i + 1]);
    }
  }
  return StepFunction(std::move(bps), std::move(vals));
}

}  // namespace hardy
