#include "hwave/gabor.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace hwave {

namespace {

// |w(t)|^2 as a piecewise-exponential function: products of segment pairs,
// with frequency omega_a - omega_b on each overlap.
PiecewiseExpFunction abs_squared(const PiecewiseExpFunction& w) {
  std::vector<ExpSegment> out;
  for (const auto& a : w.segments())
    for (const auto& b : w.segments()) {
      const double lo = std::max(a.t0, b.t0);
      const double hi = std::min(a.t1, b.t1);
      if (lo < hi) out.push_back({lo, hi, a.c * std::conj(b.c), a.omega - b.omega});
    }
  return PiecewiseExpFunction(std::move(out));
}

struct NRange {
  long long lo, hi;
};

// n with supp(g) intersecting supp(w) + alpha*n, widened by one on each side.
NRange translation_range(const PiecewiseExpFunction& g, const PiecewiseExpFunction& w,
                         double alpha) {
  const auto sg = g.support();
  const auto sw = w.support();
  if (!sg || !sw) return {0, -1};
  const long long lo =
      static_cast<long long>(std::floor((sg->first - sw->second) / alpha)) - 1;
  const long long hi =
      static_cast<long long>(std::ceil((sg->second - sw->first) / alpha)) + 1;
  return {lo, hi};
}

}  // namespace

GaborLattice::GaborLattice(double alpha_, double beta_) : alpha(alpha_), beta(beta_) {
  if (!(alpha > 0.0)) throw std::invalid_argument("GaborLattice: alpha must be > 0");
  if (beta == 0.0) throw std::invalid_argument("GaborLattice: beta must be nonzero");
}

PiecewiseExpFunction gabor_atom(const PiecewiseExpFunction& w, const GaborLattice& lat,
                                long long k, long long n) {
  return modulate(translate(w, lat.alpha * static_cast<double>(n)),
                  lat.beta * static_cast<double>(k));
}

bool density_admissible(const GaborLattice& lat) {
  return lat.volume() <= 1.0 + 1e-12;
}

TilingCheck tiling_parseval_check(const PiecewiseExpFunction& w,
                                  const GaborLattice& lat) {
  constexpr double kTol = 1e-12;
  const auto sw = w.support();
  if (!sw) return TilingCheck::not_parseval;  // zero window
  if (sw->second - sw->first > 1.0 / std::abs(lat.beta) + kTol)
    return TilingCheck::inapplicable;

  // Fold (1/|beta|) sum_n |w(t - alpha n)|^2 onto one period [0, alpha).
  const PiecewiseExpFunction w2 = abs_squared(w);
  const double alpha = lat.alpha;
  const long long n_lo = static_cast<long long>(std::floor(-sw->second / alpha)) - 1;
  const long long n_hi = static_cast<long long>(std::ceil((alpha - sw->first) / alpha)) + 1;
  std::vector<ExpSegment> folded;
  for (long long n = n_lo; n <= n_hi; ++n) {
    const PiecewiseExpFunction shifted = translate(w2, alpha * static_cast<double>(n));
    for (const auto& s : shifted.segments()) {
      const double lo = std::max(s.t0, 0.0);
      const double hi = std::min(s.t1, alpha);
      if (lo < hi) folded.push_back({lo, hi, s.c / std::abs(lat.beta), s.omega});
    }
  }
  const PiecewiseExpFunction periodized =
      PiecewiseExpFunction(std::move(folded)).normal_form();

  // The tiling sum must equal 1 on every elementary interval of [0, alpha):
  // constant part 1, all oscillating terms gone, no gaps.
  double covered = 0.0;
  std::map<std::pair<double, double>, Complex> constant_part;
  for (const auto& s : periodized.segments()) {
    if (std::abs(s.omega) < 1e-9)
      constant_part[{s.t0, s.t1}] += s.c;
    else if (std::abs(s.c) > kTol)
      return TilingCheck::not_parseval;
  }
  for (const auto& [iv, c] : constant_part) {
    if (std::abs(c - Complex(1.0, 0.0)) > kTol) return TilingCheck::not_parseval;
    covered += iv.second - iv.first;
  }
  if (std::abs(covered - alpha) > kTol) return TilingCheck::not_parseval;
  return TilingCheck::parseval;
}

double gabor_frame_sum(const PiecewiseExpFunction& g, const PiecewiseExpFunction& w,
                       const GaborLattice& lat, int K) {
  const NRange nr = translation_range(g, w, lat.alpha);
  double sum = 0.0;
  for (long long n = nr.lo; n <= nr.hi; ++n) {
    const PiecewiseExpFunction shifted =
        translate(w, lat.alpha * static_cast<double>(n));
    for (long long k = -K; k <= K; ++k) {
      const Complex c =
          inner_product(g, modulate(shifted, lat.beta * static_cast<double>(k)));
      sum += std::norm(c);
    }
  }
  return sum;
}

double parseval_defect(const PiecewiseExpFunction& w, const GaborLattice& lat,
                       std::span<const PiecewiseExpFunction> tests, int K) {
  if (tests.empty()) throw std::invalid_argument("parseval_defect: no test functions");
  if (K < 1) throw std::invalid_argument("parseval_defect: K must be >= 1");
  double worst = 0.0;
  for (const auto& g : tests) {
    const double gsq = norm_sq(g);
    if (!(gsq > 0.0))
      throw std::invalid_argument("parseval_defect: zero test function");
    const double sum = gabor_frame_sum(g, w, lat, K);
    worst = std::max(worst, std::abs(sum - gsq) / gsq);
  }
  return worst;
}

bool window_norm_law_check(const PiecewiseExpFunction& w, const GaborLattice& lat) {
  return std::abs(norm_sq(w) - lat.volume()) <= 1e-10;
}

}  // namespace hwave
