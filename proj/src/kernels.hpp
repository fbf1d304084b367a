#pragma once

// Closed forms and quadratures for one continuous piece, written in the
// variable w = F(x), which runs over [F0, F1] with dF = dw. The piece carries
// the constant value c >= 0 of |psi|.

#include <cmath>
#include <limits>

#include "hardy/integrate.hpp"
#include "hardy/quadrature.hpp"

namespace hardy::kernels {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

inline Integral from(const QuadratureResult& q, double scale = 1.0) {
  return {scale * q.value, scale * q.abs_error};
}

inline double nonneg_pow(double base, double p) { return base <= 0.0 ? 0.0 : std::pow(base, p); }

/// integral_{F0}^{F1} ((I0 + c (w - F0)) / w)^p dw: the cumulative average
/// below x, with I0 the mass of c dF accumulated before the piece.
inline Integral lower(double F0, double F1, double I0, double c, double p, double tol) {
  if (F0 <= 0.0) return {nonneg_pow(c, p) * F1, 0.0};  // I0 = 0, the ratio is c
  const double D = I0 - c * F0;
  if (p == 1.0) return {c * (F1 - F0) + D * std::log(F1 / F0), 0.0};
  if (D == 0.0) return {nonneg_pow(c, p) * (F1 - F0), 0.0};
  auto f = [&](double s) {
    const double e = std::exp(s);
    return nonneg_pow(c + D / e, p) * e;
  };
  return from(integrate_adaptive(f, std::log(F0), std::log(F1), tol, {.smooth_endpoints = true}));
}

/// integral_{F0}^{F1} ((T1 + c (F1 - w)) / w)^p dw: the tail average, with T1
/// the mass of c dF from the end of the piece onwards.
inline Integral tail(double F0, double F1, double T1, double c, double p, double tol) {
  const double E = T1 + c * F1;
  if (E == 0.0) return {0.0, 0.0};
  if (F0 <= 0.0 && p >= 1.0) return {kInf, 0.0};
  if (c == 0.0) {
    if (p == 1.0) return {T1 * std::log(F1 / F0), 0.0};
    const double q = 1.0 - p;
    return {std::pow(T1, p) * (std::pow(F1, q) - std::pow(F0, q)) / q, 0.0};
  }
  if (p == 1.0) return {E * std::log(F1 / F0) - c * (F1 - F0), 0.0};
  if (F0 <= 0.0) {
    // w = F1 t^k with k = 1/(1 - p) absorbs the w^{-p} singularity at 0.
    const double k = 1.0 / (1.0 - p);
    auto f = [&](double t) { return nonneg_pow(T1 + c * F1 * (1.0 - std::pow(t, k)), p); };
    const double scale = std::pow(F1, 1.0 - p) * k;
    return from(integrate_adaptive(f, 0.0, 1.0, tol / scale, {.smooth_endpoints = true}), scale);
  }
  auto f = [&](double s) {
    const double e = std::exp(s);
    return nonneg_pow(E / e - c, p) * e;
  };
  return from(integrate_adaptive(f, std::log(F0), std::log(F1), tol, {.smooth_endpoints = true}));
}

/// integral_{F0}^{F1} (J1 + c log(F1 / w))^p dw: the Copson inner integral,
/// with J1 the integral of c/F dF from the end of the piece onwards.
inline Integral copson(double F0, double F1, double J1, double c, double p, double tol) {
  if (c == 0.0) return {nonneg_pow(J1, p) * (F1 - F0), 0.0};
  if (p == 1.0) {
    const double log_part = F0 > 0.0 ? F1 - F0 - F0 * std::log(F1 / F0) : F1;
    return {J1 * (F1 - F0) + c * log_part, 0.0};
  }
  if (F0 <= 0.0) {
    // w = F1 t^m turns the log singularity at w = 0 into t^{m-1} log^p.
    constexpr double m = 4.0;
    auto f = [&](double t) {
      if (t <= 0.0) return 0.0;
      return std::pow(J1 - c * m * std::log(t), p) * t * t * t;
    };
    return from(integrate_adaptive(f, 0.0, 1.0, tol / (F1 * m), {.smooth_endpoints = true}), F1 * m);
  }
  // s = log(F1 / w).
  auto f = [&](double s) { return std::pow(J1 + c * s, p) * std::exp(-s); };
  return from(integrate_adaptive(f, 0.0, std::log(F1 / F0), tol / F1, {.smooth_endpoints = true}), F1);
}

}  // namespace hardy::kernels
