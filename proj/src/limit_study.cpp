#include "hardy/limit_study.hpp"

#include <cmath>
#include <string>

#include "hardy/alpha_solver.hpp"
#include "hardy/errors.hpp"
#include "hardy/integrate.hpp"

namespace hardy {

namespace {

double term(const SequenceInput& seq, long i) {  // 1-based, zero beyond the list
  const auto& t = seq.terms();
  return i >= 1 && static_cast<std::size_t>(i) <= t.size() ? t[static_cast<std::size_t>(i - 1)] : 0.0;
}

}  // namespace

LimitEmbedding limit_embedding(const SequenceInput& seq, PNorm p, long K, LimitConstruction construction) {
  const auto len = static_cast<long>(seq.support_length());
  std::vector<double> breakpoints;
  std::vector<double> values{0.0};
  if (p.regime() == Regime::gt1) {
    if (K < std::max(1L, len)) {
      throw DomainError("K = " + std::to_string(K) + " is shorter than the sequence (" +
                        std::to_string(len) + " nonzero terms)");
    }
    const double m = 1.0 / static_cast<double>(K);
    for (long k = 1; k <= K; ++k) {
      breakpoints.push_back(construction == LimitConstruction::discrete ? k : k - 1);
      values.push_back(term(seq, k));
    }
    breakpoints.push_back(construction == LimitConstruction::discrete ? K + 1 : K);
    values.push_back(0.0);
    StepFunction psi = StepFunction(std::move(breakpoints), std::move(values)).canonical();
    if (construction == LimitConstruction::continuous) {
      return {Distribution::uniform(0.0, static_cast<double>(K)), std::move(psi)};
    }
    std::vector<Atom> atoms;
    for (long k = 1; k <= K; ++k) atoms.push_back({static_cast<double>(k), m});
    return {Distribution(std::move(atoms), {}), std::move(psi)};
  }
  if (p.regime() != Regime::lt1) throw DomainError("limit study needs p != 1");
  if (K < std::max(2L, len + 1)) {
    throw DomainError("K = " + std::to_string(K) + " must exceed the number of nonzero terms (" +
                      std::to_string(len) + ") by at least one");
  }
  // Density 1/K on (0, 1), atoms of mass 1/K at 2..K, psi(j) = a_{j-1}.
  const double m = 1.0 / static_cast<double>(K);
  std::vector<Atom> atoms;
  for (long j = 2; j <= K; ++j) {
    atoms.push_back({static_cast<double>(j), m});
    breakpoints.push_back(j);
    values.push_back(term(seq, j - 1));
  }
  breakpoints.push_back(K + 1);
  values.push_back(0.0);
  return {Distribution(std::move(atoms), {{0.0, 1.0, m}}),
          StepFunction(std::move(breakpoints), std::move(values)).canonical()};
}

std::vector<LimitRow> limit_study(const SequenceInput& seq, PNorm p, const std::vector<long>& Ks,
                                  LimitConstruction construction, const EvalOptions& opts) {
  if (Ks.empty()) throw DomainError("limit study needs at least one K");
  if (seq.support_length() == 0) throw DomainError("limit study needs a sequence with a nonzero term");
  const double pv = p.value();
  const bool gt1 = p.regime() == Regime::gt1;

  // Classic left-hand side the rows converge to.
  double classic = 0.0;
  if (gt1 && construction == LimitConstruction::continuous) {
    std::vector<double> bps;
    std::vector<double> vals{0.0};
    const auto& t = seq.terms();
    for (std::size_t k = 0; k < t.size(); ++k) {
      bps.push_back(static_cast<double>(k));
      vals.push_back(t[k]);
    }
    bps.push_back(static_cast<double>(t.size()));
    vals.push_back(0.0);
    classic = eval_classic_integral(StepFunction(bps, vals), p, Regime::gt1, opts).lhs_unrooted;
  } else {
    classic = eval_discrete(seq, p, p.regime(), opts).lhs_unrooted;
  }

  std::vector<LimitRow> rows;
  for (long K : Ks) {
    const LimitEmbedding e = limit_embedding(seq, p, K, construction);
    const double scale = static_cast<double>(K);
    LimitRow row;
    row.K = K;
    if (gt1) {
      const AlphaResult a = solve_alpha(e.dist, e.psi, p);
      row.alpha = a.alpha;
      row.scaled_lhs = scale * hardy_lower_functional(e.dist, e.psi, pv, opts.quad_tol).value;
      row.scaled_rhs = scale * std::pow(pv / (pv - 1.0 + a.alpha) * a.mp, pv);
    } else {
      row.scaled_lhs = scale * hardy_tail_functional(e.dist, e.psi, pv, opts.quad_tol).value;
      row.scaled_rhs = scale * std::pow(pv / (1.0 - pv), pv) * integrate_power(e.dist, e.psi, pv);
    }
    row.gap_to_classic = classic - row.scaled_lhs;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace hardy
