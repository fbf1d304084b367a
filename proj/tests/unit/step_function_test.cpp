#include <gtest/gtest.h>

#include <cmath>

#include "hardy/errors.hpp"
#include "hardy/step_function.hpp"

using hardy::StepFunction;

TEST(StepFunction, RightContinuousEvaluation) {
  const StepFunction f({1.0, 2.0}, {3.0, 1.0, 0.0});
  EXPECT_EQ(f(0.5), 3.0);
  EXPECT_EQ(f(1.0), 1.0);
  EXPECT_EQ(f(1.999), 1.0);
  EXPECT_EQ(f(2.0), 0.0);
  EXPECT_EQ(f(1e300), 0.0);
  EXPECT_EQ(f(-1e300), 3.0);
}

TEST(StepFunction, ConstantHasNoBreakpoints) {
  const auto c = StepFunction::constant(2.5);
  EXPECT_TRUE(c.breakpoints().empty());
  EXPECT_EQ(c(-7.0), 2.5);
  EXPECT_EQ(c(7.0), 2.5);
}

TEST(StepFunction, RejectsMalformedInput) {
  EXPECT_THROW(StepFunction({1.0}, {1.0}), hardy::ValidationError);
  EXPECT_THROW(StepFunction({2.0, 1.0}, {1.0, 2.0, 3.0}), hardy::ValidationError);
  EXPECT_THROW(StepFunction({1.0, 1.0}, {1.0, 2.0, 3.0}), hardy::ValidationError);
  EXPECT_THROW(StepFunction({1.0}, {1.0, std::nan("")}), hardy::ValidationError);
}

TEST(StepFunction, CanonicalMergesEqualNeighbours) {
  const StepFunction f({0.0, 1.0, 2.0}, {0.0, 1.0, 1.0, 0.0});
  const StepFunction g = f.canonical();
  EXPECT_EQ(g.breakpoints(), (std::vector<double>{0.0, 2.0}));
  EXPECT_EQ(g.values(), (std::vector<double>{0.0, 1.0, 0.0}));
}

TEST(StepFunction, AbsAndScale) {
  const StepFunction f({0.0}, {-2.0, 3.0});
  EXPECT_FALSE(f.is_nonnegative());
  EXPECT_TRUE(f.abs().is_nonnegative());
  EXPECT_EQ(f.abs()(-1.0), 2.0);
  EXPECT_EQ(f.scaled(0.5)(1.0), 1.5);
  EXPECT_TRUE(StepFunction({1.0}, {0.0, 0.0}).is_zero());
}

TEST(StepFunction, SampledUsesInteriorPoints) {
  const auto g = StepFunction::sampled({0.0, 1.0, 2.0}, [](double x) { return x < 1.0 ? 5.0 : 2.0; });
  EXPECT_EQ(g(0.0), 5.0);
  EXPECT_EQ(g(1.0), 2.0);
  EXPECT_EQ(g(-3.0), 5.0);
  EXPECT_EQ(g(9.0), 2.0);
  EXPECT_EQ(g.breakpoints(), std::vector<double>{1.0});
}
