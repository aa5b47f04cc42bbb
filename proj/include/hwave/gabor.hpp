#pragma once

#include <span>

#include "hwave/line_fn.hpp"

namespace hwave {

/// Separable time-frequency lattice alpha Z x beta Z.
struct GaborLattice {
  double alpha;  // translation step, > 0
  double beta;   // modulation step, != 0

  GaborLattice(double alpha_, double beta_);

  double volume() const { return std::abs(alpha * beta); }
  double density() const { return 1.0 / volume(); }
};

/// e^{2 pi i beta k t} w(t - alpha n)
PiecewiseExpFunction gabor_atom(const PiecewiseExpFunction& w, const GaborLattice& lat,
                                long long k, long long n);

/// Necessary condition for a Parseval Gabor frame: vol(L) <= 1.
bool density_admissible(const GaborLattice& lat);

enum class TilingCheck {
  parseval,      // (1/|beta|) sum_n |w(t - alpha n)|^2 == 1 a.e.
  not_parseval,  // the tiling sum deviates from 1
  inapplicable,  // support longer than one modulation period; use parseval_defect
};

/// Exact Parseval criterion for windows supported in an interval of length
/// <= 1/|beta|, decided on the piecewise structure with tolerance 1e-12.
TilingCheck tiling_parseval_check(const PiecewiseExpFunction& w,
                                  const GaborLattice& lat);

/// Truncated frame-operator defect: max over tests g of
/// | sum_{|k|<=K, n in support range} |<g, atom(k,n)>|^2 - |g|^2 | / |g|^2.
/// The translation range is derived exactly from the supports.
double parseval_defect(const PiecewiseExpFunction& w, const GaborLattice& lat,
                       std::span<const PiecewiseExpFunction> tests, int K);

/// sum_{|k|<=K, n in support range} |<g, atom(k,n)>|^2 for a single test.
double gabor_frame_sum(const PiecewiseExpFunction& g, const PiecewiseExpFunction& w,
                       const GaborLattice& lat, int K);

/// |w|^2 == vol(L) within 1e-10 (valid for Parseval windows).
bool window_norm_law_check(const PiecewiseExpFunction& w, const GaborLattice& lat);

}  // namespace hwave
