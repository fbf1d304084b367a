#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <queue>
#include <vector>

namespace hardy {

struct QuadratureResult {
  double value = 0.0;
  double abs_error = 0.0;
  int evaluations = 0;
  bool converged = true;
};

struct QuadratureOptions {
  /// Maps [a, b] through a + (b - a)(3t^2 - 2t^3) before integrating, which
  /// flattens algebraic endpoint singularities.
  bool smooth_endpoints = false;
  int max_intervals = 4000;
};

namespace detail {

inline constexpr int kGaussOrder = 20;

struct GaussRule {
  std::array<double, kGaussOrder> nodes{};
  std::array<double, kGaussOrder> weights{};
};

/// Gauss-Legendre nodes/weights on [-1, 1] by Newton iteration on P_n.
inline const GaussRule& gauss_rule() {
  static const GaussRule rule = [] {
    GaussRule r;
    constexpr int n = kGaussOrder;
    for (int i = 0; i < n; ++i) {
      double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
      double dp = 0.0;
      for (int iter = 0; iter < 100; ++iter) {
        double p0 = 1.0;
        double p1 = x;
        for (int k = 2; k <= n; ++k) {
          const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
          p0 = p1;
          p1 = pk;
        }
        dp = n * (x * p1 - p0) / (x * x - 1.0);
        const double dx = p1 / dp;
        x -= dx;
        if (std::abs(dx) < 1e-16) break;
      }
      r.nodes[i] = x;
      r.weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    return r;
  }();
  return rule;
}

template <class F>
double gauss(F& f, double a, double b, int& evals) {
  const auto& rule = gauss_rule();
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  double sum = 0.0;
  for (int i = 0; i < kGaussOrder; ++i) sum += rule.weights[i] * f(mid + half * rule.nodes[i]);
  evals += kGaussOrder;
  return sum * half;
}

/// Neumaier-compensated running sum.
class CompensatedSum {
 public:
  void add(double v) {
    const double t = sum_ + v;
    if (std::abs(sum_) >= std::abs(v)) {
      comp_ += (sum_ - t) + v;
    } else {
      comp_ += (v - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

}  // namespace detail

/// Globally adaptive composite Gauss-Legendre quadrature of f over [a, b].
///
/// Each interval carries its 20-point estimate and the sum over its two
/// halves; the difference is the error estimate. The interval with the
/// largest error is bisected until the summed estimate is at most abs_tol.
template <class F>
QuadratureResult integrate_adaptive(F&& f, double a, double b, double abs_tol,
                                    const QuadratureOptions& options = {}) {
  QuadratureResult result;
  if (!(b > a)) return result;

  auto mapped = [&](double t) {
    if (!options.smooth_endpoints) return f(t);
    const double s = (t - a) / (b - a);
    const double x = a + (b - a) * s * s * (3.0 - 2.0 * s);
    const double jac = 6.0 * s * (1.0 - s);
    return jac == 0.0 ? 0.0 : f(x) * jac;
  };

  struct Interval {
    double lo, hi, left, right, error;
    double fine() const { return left + right; }
    bool operator<(const Interval& other) const { return error < other.error; }
  };

  // `whole` is the estimate over [lo, hi] already known from the parent.
  auto make = [&](double lo, double hi, double whole) {
    const double mid = 0.5 * (lo + hi);
    const double left = detail::gauss(mapped, lo, mid, result.evaluations);
    const double right = detail::gauss(mapped, mid, hi, result.evaluations);
    return Interval{lo, hi, left, right, std::abs(left + right - whole)};
  };

  std::priority_queue<Interval> queue;
  queue.push(make(a, b, detail::gauss(mapped, a, b, result.evaluations)));
  double total_error = queue.top().error;
  double total_value = queue.top().fine();
  int intervals = 1;
  constexpr double eps = std::numeric_limits<double>::epsilon();

  while (total_error > abs_tol) {
    if (!std::isfinite(total_value)) break;
    if (intervals >= options.max_intervals) {
      result.converged = false;
      break;
    }
    const Interval worst = queue.top();
    const double mid = 0.5 * (worst.lo + worst.hi);
    if (!(mid > worst.lo && mid < worst.hi)) {
      result.converged = false;
      break;
    }
    // Roundoff floor: further bisection cannot reduce the estimate.
    if (total_error <= 64.0 * eps * std::abs(total_value)) break;
    queue.pop();
    const Interval left = make(worst.lo, mid, worst.left);
    const Interval right = make(mid, worst.hi, worst.right);
    total_error += left.error + right.error - worst.error;
    total_value += left.fine() + right.fine() - worst.fine();
    queue.push(left);
    queue.push(right);
    intervals += 1;
  }

  // Re-sum from scratch; the running totals drift.
  detail::CompensatedSum value;
  detail::CompensatedSum error;
  while (!queue.empty()) {
    value.add(queue.top().fine());
    error.add(queue.top().error);
    queue.pop();
  }
  result.value = value.value();
  result.abs_error = error.value();
  if (!std::isfinite(result.value)) result.converged = false;
  return result;
}

}  // namespace hardy
