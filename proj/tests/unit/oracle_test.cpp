#include <gtest/gtest.h>

#include <cmath>

#include "hardy/errors.hpp"
#include "hardy/functionals.hpp"
#include "hardy/oracle.hpp"

using namespace hardy;

namespace {
const Distribution kUniform = Distribution::uniform(0.0, 1.0);
const StepFunction kOne = StepFunction::constant(1.0);
}  // namespace

TEST(ExactDiscrete, TwoAtoms) {
  const Distribution d({{0.0, 0.5}, {1.0, 0.5}}, {});
  const StepFunction psi({0.5}, {1.0, 0.0});
  EXPECT_DOUBLE_EQ(exact_discrete_eval(d, psi, PNorm(2.0), Functional::hardy_gt1), 0.625);
}

TEST(ExactDiscrete, SingleAtom) {
  const Distribution d = Distribution::point_mass(3.0);
  const StepFunction psi({3.0}, {9.0, 2.0});
  EXPECT_DOUBLE_EQ(exact_discrete_eval(d, psi, PNorm(2.5), Functional::hardy_gt1), std::pow(2.0, 2.5));
}

TEST(ExactDiscrete, LowestAtomInTailFunctionalIsInfinite) {
  const Distribution d({{1.0, 0.5}, {2.0, 0.5}}, {});
  EXPECT_TRUE(std::isinf(exact_discrete_eval(d, kOne, PNorm(0.5), Functional::hardy_lt1)));
}

TEST(ExactDiscrete, Copson) {
  // Atoms at 0 and 1 with mass 1/2, psi = 1: inner(0) = 0.5/0.5 + 0.5/1 = 1.5,
  // inner(1) = 0.5.
  const Distribution d({{0.0, 0.5}, {1.0, 0.5}}, {});
  EXPECT_DOUBLE_EQ(exact_discrete_eval(d, kOne, PNorm(2.0), Functional::copson), 0.5 * 2.25 + 0.5 * 0.25);
}

TEST(ExactDiscrete, RejectsSegments) {
  EXPECT_THROW(exact_discrete_eval(kUniform, kOne, PNorm(2.0), Functional::hardy_gt1), DomainError);
}

TEST(MonteCarlo, ConstantPsiHardy) {
  const McEstimate mc = mc_estimate(kUniform, kOne, PNorm(2.0), Functional::hardy_gt1, 1, 1'000'000);
  EXPECT_NEAR(mc.mean, 1.0, 0.003);
}

TEST(MonteCarlo, Deterministic) {
  const Distribution d({{0.0, 0.3}}, {{0.0, 1.0, 0.7}});
  const StepFunction psi({0.4}, {2.0, 1.0});
  const auto a = mc_estimate(d, psi, PNorm(1.7), Functional::copson, 77, 5000);
  const auto b = mc_estimate(d, psi, PNorm(1.7), Functional::copson, 77, 5000);
  EXPECT_EQ(a, b);
  EXPECT_NE(a, mc_estimate(d, psi, PNorm(1.7), Functional::copson, 78, 5000));
}

TEST(MonteCarlo, CopsonGammaTruth) {
  const McEstimate mc = mc_estimate(kUniform, kOne, PNorm(2.0), Functional::copson, 2, 1'000'000);
  EXPECT_LE(std::abs(mc.mean - 2.0), 3.0 * mc.std_error);
}

TEST(MonteCarlo, AgreesWithQuadratureOnMixedLaw) {
  const Distribution d({{0.5, 0.3}}, {{0.0, 0.5, 0.2}, {1.0, 2.0, 0.5}});
  const StepFunction psi({0.25, 1.5}, {3.0, 1.0, 2.0});
  const double exact = hardy_lower_functional(d, psi, 2.5).value;
  const McEstimate mc = mc_estimate(d, psi, PNorm(2.5), Functional::hardy_gt1, 3, 200'000);
  EXPECT_LE(std::abs(mc.mean - exact), 4.0 * mc.std_error);
}

TEST(MonteCarlo, RejectsSmallSamples) {
  EXPECT_THROW(mc_estimate(kUniform, kOne, PNorm(2.0), Functional::hardy_gt1, 0, 999), DomainError);
}

TEST(PowerIdentity, UniformLower) {
  const auto c = power_integral_identity(kUniform, kOne, PNorm(2.0), IdentityMode::lower);
  EXPECT_DOUBLE_EQ(c.lhs, 1.0);
  EXPECT_NEAR(c.rhs, 1.0, 1e-14);
  EXPECT_LE(c.gap, 2e-10);
}

TEST(PowerIdentity, UniformTailImproperEndpoint) {
  const auto c = power_integral_identity(kUniform, kOne, PNorm(0.5), IdentityMode::tail);
  EXPECT_DOUBLE_EQ(c.lhs, 1.0);
  EXPECT_NEAR(c.rhs, 1.0, 1e-14);
}

TEST(PowerIdentity, FailsOnAnAtom) {
  const auto c = power_integral_identity(Distribution::point_mass(0.0), kOne, PNorm(2.0), IdentityMode::lower);
  EXPECT_DOUBLE_EQ(c.lhs, 1.0);
  EXPECT_DOUBLE_EQ(c.rhs, 2.0);
  EXPECT_DOUBLE_EQ(c.gap, 1.0);
}

TEST(PowerIdentity, MultiSegmentContinuousLaw) {
  const Distribution d({}, {{0.0, 1.0, 0.3}, {1.0, 1.5, 0.2}, {3.0, 5.0, 0.5}});
  const StepFunction psi({0.5, 1.2, 4.0}, {2.0, 1.0, 3.0, 0.5});
  for (double p : {1.05, 2.0, 3.5}) {
    EXPECT_LE(power_integral_identity(d, psi, PNorm(p), IdentityMode::lower).gap, 2e-10) << p;
  }
  for (double p : {0.05, 0.5, 0.95}) {
    EXPECT_LE(power_integral_identity(d, psi, PNorm(p), IdentityMode::tail).gap, 2e-10) << p;
  }
}

TEST(PowerIdentity, ModeMustMatchRegime) {
  EXPECT_THROW(power_integral_identity(kUniform, kOne, PNorm(0.5), IdentityMode::lower), DomainError);
  EXPECT_THROW(power_integral_identity(kUniform, kOne, PNorm(2.0), IdentityMode::tail), DomainError);
}
