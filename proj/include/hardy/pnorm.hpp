#pragma once

#include <cmath>
#include <string>

#include "hardy/errors.hpp"

namespace hardy {

enum class Regime { gt1, lt1, eq1 };

/// Exponent of a p-norm, tagged with its regime.
class PNorm {
 public:
  explicit PNorm(double p) : p_(p) {
    if (!(p > 0.0) || !std::isfinite(p)) {
      throw DomainError("p must be a finite positive number, got " + std::to_string(p));
    }
  }

  double value() const { return p_; }
  Regime regime() const { return p_ > 1.0 ? Regime::gt1 : (p_ < 1.0 ? Regime::lt1 : Regime::eq1); }

  /// Throws DomainError unless the exponent is in `expected`.
  void require(Regime expected, const char* who) const {
    if (regime() != expected) {
      static constexpr const char* names[] = {"p > 1", "0 < p < 1", "p = 1"};
      throw DomainError(std::string(who) + " requires " + names[static_cast<int>(expected)] +
                        ", got p = " + std::to_string(p_));
    }
  }

 private:
  double p_;
};

}  // namespace hardy
