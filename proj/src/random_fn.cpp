#include "hwave/random_fn.hpp"

#include <cmath>
#include <numbers>

namespace hwave {

std::mt19937_64 make_rng(std::uint64_t seed) { return std::mt19937_64(seed); }

GroupElement random_group_element(std::mt19937_64& rng, double range) {
  std::uniform_real_distribution<double> d(-range, range);
  return {d(rng), d(rng), d(rng)};
}

PiecewiseExpFunction random_piecewise_fn(std::mt19937_64& rng, int segments,
                                         double t_lo, double t_hi,
                                         double omega_max) {
  if (segments < 1) throw std::invalid_argument("random_piecewise_fn: segments < 1");
  std::uniform_real_distribution<double> pos(t_lo, t_hi);
  std::uniform_real_distribution<double> amp(0.2, 1.0);
  std::uniform_real_distribution<double> phase(0.0, 2.0 * std::numbers::pi);
  std::uniform_real_distribution<double> freq(-omega_max, omega_max);

  std::vector<double> cuts(static_cast<std::size_t>(segments) + 1);
  for (double& c : cuts) c = pos(rng);
  std::sort(cuts.begin(), cuts.end());
  std::vector<ExpSegment> segs;
  for (int i = 0; i < segments; ++i) {
    const double a = cuts[static_cast<std::size_t>(i)];
    const double b = cuts[static_cast<std::size_t>(i) + 1];
    if (b - a < 1e-6) continue;
    segs.push_back({a, b, std::polar(amp(rng), phase(rng)), freq(rng)});
  }
  if (segs.empty())
    segs.push_back({t_lo, t_hi, std::polar(amp(rng), phase(rng)), freq(rng)});
  return PiecewiseExpFunction(std::move(segs));
}

PiecewiseExpFunction random_band_fn(std::mt19937_64& rng, const IntervalUnion& set,
                                    int terms) {
  if (terms < 1) throw std::invalid_argument("random_band_fn: terms < 1");
  std::uniform_real_distribution<double> amp(0.3, 1.0);
  std::uniform_real_distribution<double> phase(0.0, 2.0 * std::numbers::pi);
  std::uniform_real_distribution<double> freq(0.15, 0.85);
  std::vector<ExpSegment> segs;
  for (int i = 0; i < terms; ++i) {
    const Complex c = std::polar(amp(rng), phase(rng));
    const double w = freq(rng);
    for (const auto& [lo, hi] : set.intervals()) segs.push_back({lo, hi, c, w});
  }
  return PiecewiseExpFunction(std::move(segs));
}

}  // namespace hwave
