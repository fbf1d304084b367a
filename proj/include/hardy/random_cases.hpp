#pragma once

#include <cstdint>
#include <random>

#include "hardy/distribution.hpp"
#include "hardy/pnorm.hpp"
#include "hardy/step_function.hpp"

namespace hardy::random {

using Rng = std::mt19937_64;

double uniform(Rng& rng, double lo, double hi);
int uniform_int(Rng& rng, int lo, int hi);  // inclusive
bool coin(Rng& rng, double probability);

struct LawShape {
  int min_atoms = 0;
  int max_atoms = 8;
  int min_segments = 0;
  int max_segments = 4;
};

/// Random mixed law laid out left to right; touching components and atoms on
/// segment endpoints occur with positive probability.
Distribution law(Rng& rng, const LawShape& shape = {});

enum class Shape { any, nonincreasing, nondecreasing };

struct StepShape {
  int max_pieces = 10;
  bool signed_values = false;
  Shape shape = Shape::any;
  double max_value = 5.0;
};

/// Random step function whose breakpoints fall in and around the support of
/// `d`, sometimes exactly on atoms.
StepFunction step(Rng& rng, const Distribution& d, const StepShape& shape = {});

/// p drawn from [1.05, 4] for gt1 and [0.05, 0.95] for lt1.
PNorm exponent(Rng& rng, Regime regime);

/// Per-case seed derived from a suite seed, so cases are independent of order.
std::uint64_t case_seed(std::uint64_t suite_seed, std::uint64_t index);

}  // namespace hardy::random
