#include "hardy/random_cases.hpp"

#include <algorithm>

namespace hardy::random {

double uniform(Rng& rng, double lo, double hi) { return lo + (hi - lo) * unit_from_bits(rng()); }

int uniform_int(Rng& rng, int lo, int hi) {
  return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

bool coin(Rng& rng, double probability) { return unit_from_bits(rng()) < probability; }

Distribution law(Rng& rng, const LawShape& shape) {
  int n_atoms = uniform_int(rng, shape.min_atoms, shape.max_atoms);
  const int n_segments = uniform_int(rng, shape.min_segments, shape.max_segments);
  if (n_atoms + n_segments == 0) n_atoms = 1;

  std::vector<bool> is_atom(static_cast<std::size_t>(n_atoms), true);
  is_atom.resize(static_cast<std::size_t>(n_atoms + n_segments), false);
  std::shuffle(is_atom.begin(), is_atom.end(), rng);

  std::vector<double> weights;
  double total = 0.0;
  for (std::size_t i = 0; i < is_atom.size(); ++i) {
    weights.push_back(uniform(rng, 0.05, 1.0));
    total += weights.back();
  }

  std::vector<Atom> atoms;
  std::vector<Segment> segments;
  double x = uniform(rng, -3.0, 3.0);
  bool previous_atom = false;
  for (std::size_t i = 0; i < is_atom.size(); ++i) {
    // Zero gaps let atoms sit on segment endpoints and segments touch.
    const bool touch = i > 0 && !(previous_atom && is_atom[i]) && coin(rng, 0.35);
    if (i > 0 && !touch) x += uniform(rng, 0.05, 1.5);
    const double mass = weights[i] / total;
    if (is_atom[i]) {
      atoms.push_back({x, mass});
    } else {
      const double len = uniform(rng, 0.1, 2.0);
      segments.push_back({x, x + len, mass});
      x += len;
    }
    previous_atom = is_atom[i];
  }
  return Distribution(std::move(atoms), std::move(segments));
}

StepFunction step(Rng& rng, const Distribution& d, const StepShape& shape) {
  const double lo = d.support_min();
  const double hi = d.support_max();
  const int pieces = uniform_int(rng, 1, shape.max_pieces);
  std::vector<double> cuts;
  for (int i = 1; i < pieces; ++i) {
    const auto& comps = d.components();
    if (coin(rng, 0.3)) {
      const Component& c = comps[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<int>(comps.size()) - 1))];
      cuts.push_back(coin(rng, 0.5) ? c.lo : c.hi);
    } else {
      cuts.push_back(uniform(rng, lo - 0.5, hi + 0.5));
    }
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  std::vector<double> values;
  for (std::size_t i = 0; i <= cuts.size(); ++i) {
    double v = coin(rng, 0.15) ? 0.0 : uniform(rng, 0.0, shape.max_value);
    if (shape.signed_values && coin(rng, 0.5)) v = -v;
    values.push_back(v);
  }
  if (shape.shape == Shape::nonincreasing) std::sort(values.begin(), values.end(), std::greater<>());
  if (shape.shape == Shape::nondecreasing) std::sort(values.begin(), values.end());
  return StepFunction(std::move(cuts), std::move(values));
}

PNorm exponent(Rng& rng, Regime regime) {
  switch (regime) {
    case Regime::gt1:
      return PNorm(uniform(rng, 1.05, 4.0));
    case Regime::lt1:
      return PNorm(uniform(rng, 0.05, 0.95));
    case Regime::eq1:
      break;
  }
  return PNorm(1.0);
}

std::uint64_t case_seed(std::uint64_t suite_seed, std::uint64_t index) {
  // splitmix64 finaliser over the pair.
  std::uint64_t z = suite_seed * 0x9E3779B97F4A7C15ULL + index + 0x632BE59BD9B4E019ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace hardy::random
