#include <gtest/gtest.h>

#include <cmath>

#include "hardy/errors.hpp"
#include "hardy/functionals.hpp"
#include "hardy/integrate.hpp"
#include "hardy/transforms.hpp"

using namespace hardy;

namespace {

/// Average of a step function over [0, u].
double partial_average(const StepFunction& f, double u) {
  const int n = 20000;
  double sum = 0.0;
  for (int i = 0; i < n; ++i) sum += f(u * (i + 0.5) / n);
  return sum / n;
}

}  // namespace

TEST(Rearrangement, IndicatorMovesToTheLeft) {
  const StepFunction chi({0.3, 0.8}, {0.0, 1.0, 0.0});
  const StepFunction t = decreasing_rearrangement(chi);
  EXPECT_EQ(t(0.0), 1.0);
  EXPECT_EQ(t(0.49), 1.0);
  EXPECT_EQ(t(0.5), 0.0);
  EXPECT_EQ(t(0.99), 0.0);
  // (1/u) int_0^u: rearranged vs original at a few levels.
  EXPECT_NEAR(partial_average(t, 0.25), 1.0, 1e-12);
  EXPECT_NEAR(partial_average(chi, 0.25), 0.0, 1e-12);
  EXPECT_NEAR(partial_average(t, 0.5), 1.0, 1e-12);
  EXPECT_NEAR(partial_average(chi, 0.5), 0.4, 1e-4);
  EXPECT_NEAR(partial_average(t, 0.9), 5.0 / 9.0, 1e-4);
  EXPECT_NEAR(partial_average(chi, 0.9), 5.0 / 9.0, 1e-4);
}

TEST(Rearrangement, NonincreasingInputIsAFixedPoint) {
  const StepFunction chi({0.0, 0.2, 0.7, 1.0}, {0.0, 3.0, 2.0, 0.5, 0.0});
  const StepFunction t = decreasing_rearrangement(chi);
  for (double u : {0.1, 0.3, 0.69, 0.71, 0.95}) EXPECT_EQ(t(u), chi(u)) << u;
}

TEST(Rearrangement, KeepsLevelMeasures) {
  const StepFunction chi({0.1, 0.4, 0.6, 0.9}, {2.0, 1.0, 4.0, 1.0, 3.0});
  const StepFunction t = decreasing_rearrangement(chi);
  // Levels: 4 on 0.2, 3 on 0.1, 2 on 0.1, 1 on 0.6.
  EXPECT_EQ(t.breakpoints().size(), 5u);
  EXPECT_NEAR(t.breakpoints()[1], 0.2, 1e-15);
  EXPECT_NEAR(t.breakpoints()[2], 0.3, 1e-15);
  EXPECT_NEAR(t.breakpoints()[3], 0.4, 1e-15);
  EXPECT_EQ(t(0.05), 4.0);
  EXPECT_EQ(t(0.25), 3.0);
  EXPECT_EQ(t(0.35), 2.0);
  EXPECT_EQ(t(0.5), 1.0);
  EXPECT_EQ(t(1.5), 0.0);
}

TEST(Rearrangement, RejectsNegativeValues) {
  EXPECT_THROW(decreasing_rearrangement(StepFunction({0.5}, {1.0, -1.0})), DomainError);
}

TEST(StretchUp, SingleAtomBecomesUniform) {
  const Distribution d = Distribution::point_mass(0.0);
  const auto t = stretch_up(d, StepFunction::constant(2.0), 0.0, PNorm(2.0));
  EXPECT_EQ(t.dist, Distribution::uniform(0.0, 1.0));
  EXPECT_EQ(t.psi, StepFunction::constant(2.0));
}

TEST(StretchUp, AtomBelowSegment) {
  const Distribution d({{0.0, 0.5}}, {{1.0, 2.0, 0.5}});
  const StepFunction psi({1.0}, {2.0, 1.0});
  const auto t = stretch_up(d, psi, 0.0, PNorm(2.0));
  EXPECT_EQ(t.dist, Distribution({}, {{0.0, 0.5, 0.5}, {1.5, 2.5, 0.5}}));
  EXPECT_EQ(t.psi, StepFunction({1.5}, {2.0, 1.0}));
  EXPECT_NEAR(integrate_power(t.dist, t.psi, 2.0), integrate_power(d, psi, 2.0), 1e-15);
  EXPECT_NEAR(t.norm_after, t.norm_before, 1e-15);
  EXPECT_NEAR(t.mean_after, t.mean_before, 1e-15);
  EXPECT_GE(t.functional_after, t.functional_before - 1e-9);
  EXPECT_NEAR(t.functional_before, hardy_lower_functional(d, psi, 2.0).value, 0.0);
}

TEST(StretchUp, Preconditions) {
  const Distribution d({{0.0, 0.5}}, {{1.0, 2.0, 0.5}});
  EXPECT_THROW(stretch_up(d, StepFunction::constant(1.0), 0.5, PNorm(2.0)), PreconditionError);
  EXPECT_THROW(stretch_up(d, StepFunction({1.0}, {1.0, 2.0}), 0.0, PNorm(2.0)), PreconditionError);
}

TEST(StretchDown, SingleAtomBecomesUniform) {
  const auto t = stretch_down(Distribution::point_mass(1.0), StepFunction::constant(3.0), 1.0, PNorm(0.5));
  EXPECT_EQ(t.dist, Distribution::uniform(0.0, 1.0));
  EXPECT_EQ(t.psi, StepFunction::constant(3.0));
}

TEST(StretchDown, SegmentBelowAtomMovesLeft) {
  // F-bar(x) = F(x + p_a) below a - p_a: the part below the atom shifts left.
  const Distribution d({{2.0, 0.5}}, {{0.0, 1.0, 0.5}});
  const auto t = stretch_down(d, StepFunction::constant(1.0), 2.0, PNorm(0.5));
  EXPECT_EQ(t.dist, Distribution({}, {{-0.5, 0.5, 0.5}, {1.5, 2.0, 0.5}}));
  EXPECT_NEAR(t.norm_after, t.norm_before, 1e-15);
  EXPECT_LE(t.functional_after, t.functional_before + 1e-9);
}

TEST(StretchDown, FunctionalDoesNotIncrease) {
  const Distribution d({{0.5, 0.3}, {2.0, 0.2}}, {{0.5, 1.0, 0.25}, {1.5, 2.0, 0.25}});
  const StepFunction psi({0.7, 1.8}, {1.0, 4.0, 0.5});
  for (double a : {0.5, 2.0}) {
    const auto t = stretch_down(d, psi, a, PNorm(0.5));
    EXPECT_LE(t.functional_after, t.functional_before + 1e-9) << a;
    EXPECT_NEAR(t.mean_after, t.mean_before, 1e-14) << a;
  }
}

TEST(StretchDown, RejectsNegativePsi) {
  EXPECT_THROW(stretch_down(Distribution::point_mass(1.0), StepFunction::constant(-1.0), 1.0, PNorm(0.5)),
               PreconditionError);
}

TEST(DeAtomize, NoAtomsIsIdentity) {
  const Distribution d({}, {{0.0, 1.0, 0.4}, {2.0, 3.0, 0.6}});
  const StepFunction psi({0.5}, {2.0, 1.0});
  const auto t = de_atomize(d, psi, StretchKind::up, PNorm(2.0));
  EXPECT_EQ(t.dist, d);
  EXPECT_EQ(t.psi, psi);
}

TEST(DeAtomize, TwoAtomsBecomeOneSegment) {
  const Distribution d({{0.0, 0.5}, {1.0, 0.5}}, {});
  const auto t = de_atomize(d, StepFunction::constant(1.0), StretchKind::up, PNorm(2.0));
  EXPECT_TRUE(t.dist.is_continuous());
  double length = 0.0;
  for (const Segment& s : t.dist.segments()) {
    EXPECT_NEAR(s.density(), 1.0, 1e-15);
    length += s.hi - s.lo;
  }
  EXPECT_NEAR(length, 1.0, 1e-15);
}

TEST(DeAtomize, NormPreservedOverThreeAtoms) {
  const Distribution d({{0.0, 0.2}, {1.0, 0.3}, {3.0, 0.1}}, {{1.0, 2.0, 0.4}});
  const StepFunction psi({0.5, 1.5, 2.5}, {5.0, 3.0, 2.0, 1.0});
  const auto t = de_atomize(d, psi, StretchKind::up, PNorm(3.0));
  EXPECT_TRUE(t.dist.is_continuous());
  EXPECT_NEAR(t.norm_after, t.norm_before, 3e-9);
  EXPECT_GE(t.functional_after, t.functional_before - 1e-9);
  const auto s = de_atomize(d, psi, StretchKind::down, PNorm(0.5));
  EXPECT_TRUE(s.dist.is_continuous());
  EXPECT_NEAR(s.norm_after, s.norm_before, 3e-9);
  EXPECT_LE(s.functional_after, s.functional_before + 1e-9);
}

TEST(ComposeWithQuantile, MixedLaw) {
  const Distribution d({{0.0, 0.5}}, {{1.0, 2.0, 0.5}});
  const StepFunction psi({1.5}, {2.0, -1.0});
  const StepFunction chi = compose_with_quantile(d, psi);
  EXPECT_EQ(chi(0.25), 2.0);
  EXPECT_EQ(chi(0.6), 2.0);
  EXPECT_EQ(chi(0.8), 1.0);
  EXPECT_EQ(chi(1.2), 0.0);
  EXPECT_EQ(chi(-0.2), 0.0);
}
