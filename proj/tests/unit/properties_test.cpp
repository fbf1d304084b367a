#include <gtest/gtest.h>

#include <sstream>

#include "hardy/suite.hpp"

using namespace hardy;

TEST(PropertySuite, AllChecksPass) {
  const auto checks = run_property_suite({.cases = 500, .seed = 0});
  std::ostringstream os;
  print_suite(os, checks);
  EXPECT_TRUE(suite_passed(checks)) << os.str();
  EXPECT_GE(checks.size(), 10u);
}

TEST(PropertySuite, OtherSeedPasses) {
  const auto checks = run_property_suite({.cases = 200, .seed = 20261016});
  std::ostringstream os;
  print_suite(os, checks);
  EXPECT_TRUE(suite_passed(checks)) << os.str();
}

TEST(PropertySuite, OrderIndependentCases) {
  std::ostringstream a;
  std::ostringstream b;
  print_suite(a, run_property_suite({.cases = 30, .seed = 4}));
  print_suite(b, run_property_suite({.cases = 30, .seed = 4}));
  EXPECT_EQ(a.str(), b.str());
}
