#include "hardy/transforms.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hardy/errors.hpp"
#include "hardy/functionals.hpp"
#include "hardy/integrate.hpp"
#include "hardy/pieces.hpp"

namespace hardy {

namespace {

struct Stretched {
  Distribution dist;
  StepFunction psi;
};

const Atom& find_atom(const Distribution& d, double location) {
  const auto& atoms = d.atoms();
  const auto it = std::find_if(atoms.begin(), atoms.end(), [&](const Atom& a) { return a.x == location; });
  if (it == atoms.end()) {
    throw PreconditionError("no atom at location " + std::to_string(location));
  }
  return *it;
}

bool same_density(const Segment& a, const Segment& b) {
  return std::abs(a.density() - b.density()) <= 1e-12 * std::max(a.density(), b.density());
}

/// Joins touching segments of equal density unless an atom sits on the join.
std::vector<Segment> merge_segments(std::vector<Segment> segs, const std::vector<Atom>& atoms) {
  std::sort(segs.begin(), segs.end(), [](const Segment& a, const Segment& b) { return a.lo < b.lo; });
  std::vector<Segment> out;
  for (const Segment& s : segs) {
    if (!out.empty() && out.back().hi == s.lo && same_density(out.back(), s) &&
        std::none_of(atoms.begin(), atoms.end(), [&](const Atom& a) { return a.x == s.lo; })) {
      out.back().hi = s.hi;
      out.back().mass += s.mass;
    } else {
      out.push_back(s);
    }
  }
  return out;
}

Stretched raw_stretch_up(const Distribution& d, const StepFunction& psi, double a) {
  const double pa = find_atom(d, a).mass;
  const double end = a + pa;
  std::vector<Atom> atoms;
  for (const Atom& at : d.atoms()) {
    if (at.x < a) atoms.push_back(at);
    if (at.x > a) atoms.push_back({at.x + pa, at.mass});
  }
  std::vector<Segment> segs{{a, end, pa}};
  for (const Segment& s : d.segments()) {
    if (s.hi <= a) segs.push_back(s);
    else segs.push_back({s.lo + pa, s.hi + pa, s.mass});
  }
  segs = merge_segments(std::move(segs), atoms);

  std::vector<double> cuts{a, end};
  for (double b : psi.breakpoints()) cuts.push_back(b < a ? b : b + pa);
  const double at_atom = psi(a);
  // On the join x = a + p_a both branches give psi(a).
  auto stretched = [&](double x) {
    if (x < a) return psi(x);
    if (x < end) return at_atom;
    return psi(x - pa);
  };
  return {Distribution(std::move(atoms), std::move(segs)), StepFunction::sampled(std::move(cuts), stretched)};
}

Stretched raw_stretch_down(const Distribution& d, const StepFunction& psi, double a) {
  const double pa = find_atom(d, a).mass;
  const double start = a - pa;
  std::vector<Atom> atoms;
  for (const Atom& at : d.atoms()) {
    if (at.x < a) atoms.push_back({at.x - pa, at.mass});
    if (at.x > a) atoms.push_back(at);
  }
  std::vector<Segment> segs{{start, a, pa}};
  for (const Segment& s : d.segments()) {
    if (s.hi <= a) segs.push_back({s.lo - pa, s.hi - pa, s.mass});
    else segs.push_back(s);
  }
  segs = merge_segments(std::move(segs), atoms);

  std::vector<double> cuts{start, a};
  for (double b : psi.breakpoints()) cuts.push_back(b < a ? b - pa : b);
  const double at_atom = psi(a);
  auto stretched = [&](double x) {
    if (x < start) return psi(x + pa);
    if (x <= a) return at_atom;
    return psi(x);
  };
  return {Distribution(std::move(atoms), std::move(segs)), StepFunction::sampled(std::move(cuts), stretched)};
}

void check_up(const Distribution& d, const StepFunction& psi) {
  if (!nonnegative_on_support(d, psi)) throw PreconditionError("stretch_up requires psi >= 0 on the support");
  if (!nonincreasing_on_support(d, psi)) {
    throw PreconditionError("stretch_up requires psi nonincreasing on the support");
  }
}

void check_down(const Distribution& d, const StepFunction& psi) {
  if (!nonnegative_on_support(d, psi)) {
    throw PreconditionError("stretch_down requires psi >= 0 on the support");
  }
}

TransformOutput measure(const Distribution& before_d, const StepFunction& before_psi, Stretched after,
                        StretchKind kind, PNorm p, double quad_tol) {
  const double pv = p.value();
  auto functional = [&](const Distribution& d, const StepFunction& psi) {
    return kind == StretchKind::up ? hardy_lower_functional(d, psi, pv, quad_tol).value
                                   : hardy_tail_functional(d, psi, pv, quad_tol).value;
  };
  TransformOutput out{std::move(after.dist), std::move(after.psi)};
  out.norm_before = std::pow(integrate_power(before_d, before_psi, pv), 1.0 / pv);
  out.norm_after = std::pow(integrate_power(out.dist, out.psi, pv), 1.0 / pv);
  out.mean_before = integrate_power(before_d, before_psi, 1.0);
  out.mean_after = integrate_power(out.dist, out.psi, 1.0);
  out.functional_before = functional(before_d, before_psi);
  out.functional_after = functional(out.dist, out.psi);
  return out;
}

}  // namespace

StepFunction decreasing_rearrangement(const StepFunction& chi) {
  std::vector<double> cuts{0.0};
  for (double b : chi.breakpoints()) {
    if (b > 0.0 && b < 1.0) cuts.push_back(b);
  }
  cuts.push_back(1.0);

  struct Level {
    double value;
    double length;
  };
  std::vector<Level> levels;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double v = chi(cuts[i]);
    if (v < 0.0) throw DomainError("decreasing_rearrangement requires chi >= 0 on [0, 1]");
    levels.push_back({v, cuts[i + 1] - cuts[i]});
  }
  std::stable_sort(levels.begin(), levels.end(),
                   [](const Level& x, const Level& y) { return x.value > y.value; });

  std::vector<double> bps{0.0};
  std::vector<double> values{0.0};
  double at = 0.0;
  for (std::size_t i = 0; i < levels.size(); ++i) {
    values.push_back(levels[i].value);
    at = i + 1 == levels.size() ? 1.0 : at + levels[i].length;
    if (!(at > bps.back())) {
      // A level shorter than the spacing of doubles at `at`; fold it in.
      values.pop_back();
      continue;
    }
    bps.push_back(at);
  }
  values.push_back(0.0);
  if (bps.back() != 1.0) bps.back() = 1.0;
  return StepFunction(std::move(bps), std::move(values)).canonical();
}

TransformOutput stretch_up(const Distribution& d, const StepFunction& psi, double atom_location,
                           PNorm p, double quad_tol) {
  find_atom(d, atom_location);
  check_up(d, psi);
  return measure(d, psi, raw_stretch_up(d, psi, atom_location), StretchKind::up, p, quad_tol);
}

TransformOutput stretch_down(const Distribution& d, const StepFunction& psi, double atom_location,
                             PNorm p, double quad_tol) {
  find_atom(d, atom_location);
  check_down(d, psi);
  return measure(d, psi, raw_stretch_down(d, psi, atom_location), StretchKind::down, p, quad_tol);
}

TransformOutput de_atomize(const Distribution& d, const StepFunction& psi, StretchKind kind, PNorm p,
                           double quad_tol) {
  kind == StretchKind::up ? check_up(d, psi) : check_down(d, psi);
  Stretched cur{d, psi};
  // Lowest atom first; locations move after each stretch, so rescan.
  while (!cur.dist.atoms().empty()) {
    const double a = cur.dist.atoms().front().x;
    cur = kind == StretchKind::up ? raw_stretch_up(cur.dist, cur.psi, a)
                                  : raw_stretch_down(cur.dist, cur.psi, a);
  }
  return measure(d, psi, std::move(cur), kind, p, quad_tol);
}

StepFunction compose_with_quantile(const Distribution& d, const StepFunction& psi) {
  std::vector<double> cuts{0.0, 1.0};
  for (const Piece& pc : decompose(d, psi)) {
    cuts.push_back(pc.cdf_before);
    cuts.push_back(std::min(1.0, pc.cdf_after()));
  }
  const StepFunction a = psi.abs();
  auto chi = [&](double v) {
    if (v <= 0.0 || v >= 1.0) return 0.0;
    return a(d.quantile(v));
  };
  return StepFunction::sampled(std::move(cuts), chi);
}

}  // namespace hardy
