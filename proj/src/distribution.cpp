#include "hardy/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "hardy/errors.hpp"

namespace hardy {

namespace {

constexpr double kMassTolerance = 1e-9;

std::string idx(const char* what, std::size_t i) {
  return std::string(what) + "[" + std::to_string(i) + "]";
}

}  // namespace

Distribution::Distribution(std::vector<Atom> atoms, std::vector<Segment> segments)
    : atoms_(std::move(atoms)), segments_(std::move(segments)) {
  if (atoms_.empty() && segments_.empty()) {
    throw ValidationError("distribution has no atoms and no segments");
  }
  double total = 0.0;
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    const Atom& a = atoms_[i];
    if (!std::isfinite(a.x)) throw ValidationError(idx("atoms", i) + ".x is not finite");
    if (!(a.mass > 0.0 && a.mass <= 1.0)) {
      throw ValidationError(idx("atoms", i) + ".mass must lie in (0, 1], got " +
                            std::to_string(a.mass));
    }
    if (i > 0 && !(a.x > atoms_[i - 1].x)) {
      throw ValidationError("atom locations must be strictly increasing (" + idx("atoms", i) + ")");
    }
    total += a.mass;
  }
  for (std::size_t i = 0; i < segments_.size(); ++i) {
    const Segment& s = segments_[i];
    if (!std::isfinite(s.lo) || !std::isfinite(s.hi)) {
      throw ValidationError(idx("segments", i) + " has a non-finite endpoint");
    }
    if (!(s.hi > s.lo)) throw ValidationError(idx("segments", i) + " is degenerate (hi <= lo)");
    if (!(s.mass > 0.0 && s.mass <= 1.0)) {
      throw ValidationError(idx("segments", i) + ".mass must lie in (0, 1], got " +
                            std::to_string(s.mass));
    }
    if (i > 0 && s.lo < segments_[i - 1].hi) {
      throw ValidationError(idx("segments", i) + " overlaps or precedes the previous segment");
    }
    total += s.mass;
  }
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    for (std::size_t j = 0; j < segments_.size(); ++j) {
      if (atoms_[i].x > segments_[j].lo && atoms_[i].x < segments_[j].hi) {
        throw ValidationError(idx("atoms", i) + " lies inside " + idx("segments", j));
      }
    }
  }
  if (std::abs(total - 1.0) > kMassTolerance) {
    throw ValidationError("total mass must be 1 (within 1e-9), got " + std::to_string(total));
  }
  if (total != 1.0) {
    for (Atom& a : atoms_) a.mass /= total;
    for (Segment& s : segments_) s.mass /= total;
  }

  atom_cum_.assign(1, 0.0);
  for (const Atom& a : atoms_) atom_cum_.push_back(atom_cum_.back() + a.mass);
  segment_cum_.assign(1, 0.0);
  for (const Segment& s : segments_) segment_cum_.push_back(segment_cum_.back() + s.mass);

  std::size_t ia = 0;
  double before = 0.0;
  auto push_atom = [&] {
    components_.push_back({Component::Kind::atom, atoms_[ia].x, atoms_[ia].x, atoms_[ia].mass, before});
    before += atoms_[ia].mass;
    ++ia;
  };
  for (const Segment& s : segments_) {
    while (ia < atoms_.size() && atoms_[ia].x <= s.lo) push_atom();
    components_.push_back({Component::Kind::segment, s.lo, s.hi, s.mass, before});
    before += s.mass;
  }
  while (ia < atoms_.size()) push_atom();
}

Distribution Distribution::uniform(double lo, double hi) { return Distribution({}, {{lo, hi, 1.0}}); }

Distribution Distribution::point_mass(double x) { return Distribution({{x, 1.0}}, {}); }

double Distribution::cdf(double x, Side side) const {
  if (std::isnan(x)) throw DomainError("cdf evaluated at NaN");
  if (x > support_max() || (side == Side::right && x == support_max())) return 1.0;

  const auto ait = side == Side::right
                       ? std::upper_bound(atoms_.begin(), atoms_.end(), x,
                                          [](double v, const Atom& a) { return v < a.x; })
                       : std::lower_bound(atoms_.begin(), atoms_.end(), x,
                                          [](const Atom& a, double v) { return a.x < v; });
  double mass = atom_cum_[static_cast<std::size_t>(ait - atoms_.begin())];

  // Segments with lo < x; only the last of them can straddle x.
  const auto sit = std::lower_bound(segments_.begin(), segments_.end(), x,
                                    [](const Segment& s, double v) { return s.lo < v; });
  const auto k = static_cast<std::size_t>(sit - segments_.begin());
  if (k > 0) {
    const Segment& s = segments_[k - 1];
    mass += segment_cum_[k - 1];
    mass += x >= s.hi ? s.mass : s.mass * ((x - s.lo) / (s.hi - s.lo));
  }
  return std::min(mass, 1.0);
}

double Distribution::quantile(double u) const {
  if (!(u > 0.0 && u <= 1.0)) {
    throw DomainError("quantile level must lie in (0, 1], got " + std::to_string(u));
  }
  const auto it = std::partition_point(components_.begin(), components_.end(),
                                       [u](const Component& c) { return c.mass_before + c.mass < u; });
  if (it == components_.end()) return components_.back().hi;
  if (it->kind == Component::Kind::atom) return it->lo;
  const double x = it->lo + (u - it->mass_before) / it->mass * (it->hi - it->lo);
  return std::clamp(x, it->lo, it->hi);
}

std::vector<double> Distribution::sample(std::uint64_t seed, std::size_t n) const {
  std::mt19937_64 gen(seed);
  std::vector<double> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(quantile(unit_from_bits(gen())));
  return out;
}

}  // namespace hardy
