#include "hardy/pieces.hpp"

#include <algorithm>

namespace hardy {

std::vector<Piece> decompose(const Distribution& d, const StepFunction& psi) {
  std::vector<Piece> pieces;
  pieces.reserve(d.components().size() + psi.breakpoints().size());
  const auto& bps = psi.breakpoints();
  double before = 0.0;
  for (const Component& c : d.components()) {
    if (c.kind == Component::Kind::atom) {
      pieces.push_back({true, c.lo, c.lo, c.mass, psi(c.lo), before});
      before += c.mass;
      continue;
    }
    auto first = std::upper_bound(bps.begin(), bps.end(), c.lo);
    auto last = std::lower_bound(first, bps.end(), c.hi);
    std::vector<double> cuts{c.lo};
    cuts.insert(cuts.end(), first, last);
    cuts.push_back(c.hi);
    const double width = c.hi - c.lo;
    double consumed = 0.0;  // mass of earlier sub-pieces of this segment
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
      const double upto = i + 2 == cuts.size() ? c.mass : c.mass * ((cuts[i + 1] - c.lo) / width);
      const double mass = upto - consumed;
      consumed = upto;
      pieces.push_back({false, cuts[i], cuts[i + 1], mass, psi(cuts[i]), before});
      before += mass;
    }
  }
  return pieces;
}

namespace {

template <class Pred>
bool adjacent_ok(const Distribution& d, const StepFunction& psi, Pred ok) {
  const auto pieces = decompose(d, psi);
  for (std::size_t i = 1; i < pieces.size(); ++i) {
    if (!ok(pieces[i - 1].value, pieces[i].value)) return false;
  }
  return true;
}

}  // namespace

bool nonincreasing_on_support(const Distribution& d, const StepFunction& psi) {
  return adjacent_ok(d, psi, [](double a, double b) { return b <= a; });
}

bool nondecreasing_on_support(const Distribution& d, const StepFunction& psi) {
  return adjacent_ok(d, psi, [](double a, double b) { return b >= a; });
}

bool nonnegative_on_support(const Distribution& d, const StepFunction& psi) {
  const auto pieces = decompose(d, psi);
  return std::all_of(pieces.begin(), pieces.end(), [](const Piece& p) { return p.value >= 0.0; });
}

bool zero_on_support(const Distribution& d, const StepFunction& psi) {
  const auto pieces = decompose(d, psi);
  return std::all_of(pieces.begin(), pieces.end(), [](const Piece& p) { return p.value == 0.0; });
}

}  // namespace hardy
