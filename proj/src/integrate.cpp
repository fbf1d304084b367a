#include "hardy/integrate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hardy/quadrature.hpp"

namespace hardy {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

Integral integrate(const Distribution& d, const std::function<double(double)>& g, double quad_tol,
                   const std::vector<double>& cuts) {
  double atoms = 0.0;
  for (const Atom& a : d.atoms()) {
    const double v = g(a.x);
    if (!std::isfinite(v)) return {kInf, 0.0};
    atoms += v * a.mass;
  }
  if (d.segments().empty()) return {atoms, 0.0};

  std::vector<double> sorted_cuts = cuts;
  std::sort(sorted_cuts.begin(), sorted_cuts.end());
  Integral out;
  detail::CompensatedSum sum;
  sum.add(atoms);
  bool finite = true;
  auto guarded = [&](double x) {
    const double v = g(x);
    if (!std::isfinite(v)) {
      finite = false;
      return 0.0;
    }
    return v;
  };
  std::vector<std::pair<double, double>> parts;
  for (const Segment& s : d.segments()) {
    double lo = s.lo;
    for (auto it = std::upper_bound(sorted_cuts.begin(), sorted_cuts.end(), s.lo);
         it != sorted_cuts.end() && *it < s.hi; ++it) {
      parts.emplace_back(lo, *it);
      lo = *it;
    }
    parts.emplace_back(lo, s.hi);
  }
  const double tol = quad_tol / static_cast<double>(parts.size());
  std::size_t k = 0;
  for (const Segment& s : d.segments()) {
    const double rho = s.density();
    for (; k < parts.size() && parts[k].second <= s.hi; ++k) {
      const auto q = integrate_adaptive(guarded, parts[k].first, parts[k].second, tol / rho);
      if (!finite || !std::isfinite(q.value)) return {kInf, 0.0};
      sum.add(rho * q.value);
      out.abs_error += rho * q.abs_error;
    }
  }
  out.value = sum.value();
  return out;
}

double integrate_power(const Distribution& d, const StepFunction& psi, double power) {
  detail::CompensatedSum sum;
  for (const Piece& p : decompose(d, psi)) {
    const double v = std::abs(p.value);
    if (v == 0.0) continue;
    sum.add((power == 1.0 ? v : std::pow(v, power)) * p.mass);
  }
  return sum.value();
}

PartialIntegrals::PartialIntegrals(const Distribution& d, const StepFunction& psi)
    : pieces_(decompose(d, psi.abs())) {
  const std::size_t n = pieces_.size();
  prefix_.assign(n + 1, 0.0);
  for (std::size_t k = 0; k < n; ++k) prefix_[k + 1] = prefix_[k] + pieces_[k].value * pieces_[k].mass;
  suffix_.assign(n + 1, 0.0);
  suffix_ratio_.assign(n + 1, 0.0);
  for (std::size_t k = n; k-- > 0;) {
    const Piece& p = pieces_[k];
    suffix_[k] = suffix_[k + 1] + p.value * p.mass;
    double ratio = 0.0;
    if (p.value > 0.0) {
      if (p.is_atom) {
        ratio = p.value * p.mass / p.cdf_after();
      } else {
        ratio = p.cdf_before > 0.0 ? p.value * std::log1p(p.mass / p.cdf_before) : kInf;
      }
    }
    suffix_ratio_[k] = suffix_ratio_[k + 1] + ratio;
  }
}

double PartialIntegrals::below(double x) const {
  const auto it = std::partition_point(pieces_.begin(), pieces_.end(), [x](const Piece& p) {
    return p.is_atom ? p.lo <= x : p.lo < x;
  });
  const auto k = static_cast<std::size_t>(it - pieces_.begin());
  if (k == 0) return 0.0;
  const Piece& last = pieces_[k - 1];
  if (!last.is_atom && x < last.hi) {
    return prefix_[k - 1] + last.value * last.density() * (x - last.lo);
  }
  return prefix_[k];
}

namespace {

std::size_t first_not_before(const std::vector<Piece>& pieces, double x) {
  const auto it = std::partition_point(pieces.begin(), pieces.end(), [x](const Piece& p) {
    return p.is_atom ? p.lo < x : p.hi <= x;
  });
  return static_cast<std::size_t>(it - pieces.begin());
}

}  // namespace

double PartialIntegrals::above(double x) const {
  const std::size_t k = first_not_before(pieces_, x);
  if (k == pieces_.size()) return 0.0;
  const Piece& p = pieces_[k];
  if (!p.is_atom && p.lo < x) return p.value * p.density() * (p.hi - x) + suffix_[k + 1];
  return suffix_[k];
}

double PartialIntegrals::above_over_cdf(double x) const {
  const std::size_t k = first_not_before(pieces_, x);
  if (k == pieces_.size()) return 0.0;
  const Piece& p = pieces_[k];
  if (!p.is_atom && p.lo < x) {
    if (p.value == 0.0) return suffix_ratio_[k + 1];
    const double at_x = p.cdf_before + p.density() * (x - p.lo);
    return p.value * std::log(p.cdf_after() / at_x) + suffix_ratio_[k + 1];
  }
  return suffix_ratio_[k];
}

}  // namespace hardy
