#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "hardy/quadrature.hpp"

using hardy::integrate_adaptive;

TEST(Quadrature, GaussRuleIntegratesHighDegreePolynomialsExactly) {
  // A 20-point rule is exact through degree 39.
  auto f = [](double x) { return 39.0 * std::pow(x, 38) + 1.0; };
  const auto r = integrate_adaptive(f, 0.0, 1.0, 1e-14);
  EXPECT_NEAR(r.value, 2.0, 1e-13);
  EXPECT_TRUE(r.converged);
}

TEST(Quadrature, SmoothIntegrand) {
  const auto r = integrate_adaptive([](double x) { return std::exp(-x * x); }, -3.0, 2.0, 1e-13);
  const double exact = 0.5 * std::sqrt(std::numbers::pi) * (std::erf(2.0) + std::erf(3.0));
  EXPECT_NEAR(r.value, exact, 1e-13);
}

TEST(Quadrature, EndpointSingularitiesWithSmoothMap) {
  const hardy::QuadratureOptions smooth{.smooth_endpoints = true};
  auto sq_log = [](double x) { return std::pow(std::log(x), 2); };
  EXPECT_NEAR(integrate_adaptive(sq_log, 0.0, 1.0, 1e-11, smooth).value, 2.0, 1e-9);
  auto root_log = [](double x) { return std::sqrt(-std::log(x)); };
  EXPECT_NEAR(integrate_adaptive(root_log, 0.0, 1.0, 1e-11, smooth).value, std::sqrt(std::numbers::pi) / 2, 1e-8);
  auto beta = [](double x) { return std::sqrt((1.0 - x) / x); };
  EXPECT_NEAR(integrate_adaptive(beta, 0.0, 1.0, 1e-11, smooth).value, std::numbers::pi / 2, 1e-8);
}

TEST(Quadrature, ErrorEstimateIsHonest) {
  auto f = [](double x) { return std::sqrt(x); };
  const auto r = integrate_adaptive(f, 0.0, 1.0, 1e-12);
  EXPECT_LE(std::abs(r.value - 2.0 / 3.0), std::max(r.abs_error, 1e-12));
}

TEST(Quadrature, EmptyInterval) {
  const auto r = integrate_adaptive([](double) { return 1.0; }, 1.0, 1.0, 1e-12);
  EXPECT_EQ(r.value, 0.0);
}
