#pragma once

#include "hwave/gabor.hpp"
#include "hwave/plancherel.hpp"

namespace hwave {

/// Truncation of the infinite system {D_{A^m} tau(gamma,eta) f}.
struct FrameConfig {
  LambdaBounds bounds;  // per-index truncation for (k1,k2,k3,m2,m3)
  int m_lo = 0;
  int m_hi = 0;
  double tol = 1e-9;
  int threads = 1;
};

/// <h, D_{A^m} tau(gamma,eta) f> evaluated spectrally on shared quadrature
/// nodes.  Exactly 0 when the node sets are disjoint; throws on
/// incommensurate (partially overlapping) grids.
Complex analysis_coefficient(const RankOneField& h, const RankOneField& f,
                             const LambdaPair& p, int m,
                             const DilationAutomorphism& d);

struct ParsevalSumResult {
  double sum = 0.0;
  double norm_sq = 0.0;  // |h|^2, the Parseval target
  double defect = 0.0;   // |sum - norm_sq| / norm_sq
};

/// Truncated double sum of |analysis_coefficient|^2 over the config.
/// Factorizes per node into translation/modulation tables so the
/// five-index sum costs O(combos * k1 * nodes) instead of a quadrature
/// per tuple; agreement with analysis_coefficient is unit-tested.
ParsevalSumResult parseval_sum(const RankOneField& h, const RankOneField& f,
                               const FrameConfig& cfg,
                               const DilationAutomorphism& d);

/// Defect of the per-lambda tensor Parseval predicate for a rank-one T:
/// | sum_{(kappa,eta)} |<T, [pi(kappa) (x) pi_bar(eta)] |lambda|^{1/2} u (x) v>|^2
///   - |T|_HS^2 | / |T|_HS^2,
/// computed via the rank-one split into a Gabor sum against u and a
/// contragredient sum against v.  Modulation indices truncate at K;
/// translation indices come from support overlap.
double per_lambda_tensor_parseval(const RankOneField& f, std::size_t node_index,
                                  const RankOneOperator& T, int K);

/// | sum_eta |<pi_bar(eta) v, u>|^2 - |u|^2 | / |u|^2 over eta = (m2, m3)
/// with |m2| <= K.  Requires G(conj v, Z x lambda Z) to pass the tiling
/// Parseval criterion.
double lemma_lem_check(double lambda, const PiecewiseExpFunction& v,
                       const PiecewiseExpFunction& u, int K);

struct Reconstruction {
  std::vector<Complex> coefficients;  // one per retained atom
  double coefficient_energy = 0.0;    // sum |c|^2
  double synthesis_norm_sq = 0.0;
  double residual = 0.0;              // |h - partial synthesis|, spectral
  double parseval_residual_sq = 0.0;  // |h|^2 - coefficient_energy
};

/// Truncated synthesis over the config's atoms; the residual is computed
/// spectrally from the atom Gram matrix.
Reconstruction reconstruct(const RankOneField& h, const RankOneField& f,
                           const FrameConfig& cfg, const DilationAutomorphism& d);

}  // namespace hwave
