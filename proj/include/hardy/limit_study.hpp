#pragma once

#include <optional>
#include <vector>

#include "hardy/functionals.hpp"

namespace hardy {

/// Law used to embed a sequence for p > 1: atoms at 1..K, or uniform on (0, K)
/// with psi = c_k on [k-1, k). For 0 < p < 1 the mixed construction (density
/// 1/K on (0, 1), atoms of mass 1/K at 2..K, psi(i + 1) = a_i) is always used.
enum class LimitConstruction { discrete, continuous };

struct LimitRow {
  long K = 0;
  double scaled_lhs = 0.0;  // K * un-rooted probabilistic LHS
  double scaled_rhs = 0.0;  // K * un-rooted RHS (sharpened constant when alpha exists)
  std::optional<double> alpha;
  double gap_to_classic = 0.0;  // classic LHS minus scaled_lhs
};

std::vector<LimitRow> limit_study(const SequenceInput& seq, PNorm p, const std::vector<long>& Ks,
                                  LimitConstruction construction = LimitConstruction::discrete,
                                  const EvalOptions& opts = {});

/// The embedding used by limit_study for one K.
struct LimitEmbedding {
  Distribution dist;
  StepFunction psi;
};
LimitEmbedding limit_embedding(const SequenceInput& seq, PNorm p, long K,
                               LimitConstruction construction = LimitConstruction::discrete);

}  // namespace hardy
