#include "hwave/line_fn.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>

namespace hwave {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
// Below this |beta| the closed form (e^{2 pi i b s1} - e^{2 pi i b s0}) / (2 pi i b)
// loses relative accuracy; switch to the midpoint limit form.
constexpr double kBetaSwitch = 1e-10;

Complex unit_exp(double phase_turns) {
  return std::polar(1.0, kTwoPi * phase_turns);
}

}  // namespace

PiecewiseExpFunction::PiecewiseExpFunction(std::vector<ExpSegment> segments)
    : segments_(std::move(segments)) {
  for (const auto& s : segments_) {
    if (!(s.t0 < s.t1))
      throw std::invalid_argument("PiecewiseExpFunction: segment requires t0 < t1");
    if (!std::isfinite(s.t0) || !std::isfinite(s.t1) || !std::isfinite(s.omega) ||
        !std::isfinite(s.c.real()) || !std::isfinite(s.c.imag()))
      throw std::invalid_argument("PiecewiseExpFunction: non-finite segment");
  }
}

PiecewiseExpFunction PiecewiseExpFunction::indicator(double t0, double t1) {
  return PiecewiseExpFunction({{t0, t1, Complex(1.0, 0.0), 0.0}});
}

Complex PiecewiseExpFunction::operator()(double t) const {
  Complex v = 0.0;
  for (const auto& s : segments_)
    if (t >= s.t0 && t < s.t1) v += s.c * unit_exp(s.omega * t);
  return v;
}

std::optional<std::pair<double, double>> PiecewiseExpFunction::support() const {
  if (segments_.empty()) return std::nullopt;
  double lo = segments_.front().t0, hi = segments_.front().t1;
  for (const auto& s : segments_) {
    lo = std::min(lo, s.t0);
    hi = std::max(hi, s.t1);
  }
  return std::make_pair(lo, hi);
}

PiecewiseExpFunction PiecewiseExpFunction::normal_form(double amp_tol) const {
  if (segments_.empty()) return {};
  std::vector<double> cuts;
  cuts.reserve(2 * segments_.size());
  for (const auto& s : segments_) {
    cuts.push_back(s.t0);
    cuts.push_back(s.t1);
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  std::vector<ExpSegment> out;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double lo = cuts[i], hi = cuts[i + 1];
    std::map<double, Complex> by_omega;
    for (const auto& s : segments_)
      if (s.t0 <= lo && hi <= s.t1) by_omega[s.omega] += s.c;
    for (const auto& [omega, c] : by_omega)
      if (std::abs(c) > amp_tol) out.push_back({lo, hi, c, omega});
  }
  return PiecewiseExpFunction(std::move(out));
}

Complex inner_product(const PiecewiseExpFunction& f, const PiecewiseExpFunction& g) {
  Complex total = 0.0;
  for (const auto& a : f.segments()) {
    for (const auto& b : g.segments()) {
      const double s0 = std::max(a.t0, b.t0);
      const double s1 = std::min(a.t1, b.t1);
      if (!(s0 < s1)) continue;
      const double beta = a.omega - b.omega;
      const Complex amp = a.c * std::conj(b.c);
      if (std::abs(beta) < kBetaSwitch) {
        total += amp * (s1 - s0) * unit_exp(beta * 0.5 * (s0 + s1));
      } else {
        total += amp * (unit_exp(beta * s1) - unit_exp(beta * s0)) /
                 Complex(0.0, kTwoPi * beta);
      }
    }
  }
  return total;
}

double norm_sq(const PiecewiseExpFunction& f) {
  return inner_product(f, f).real();
}

double norm(const PiecewiseExpFunction& f) { return std::sqrt(norm_sq(f)); }

PiecewiseExpFunction translate(const PiecewiseExpFunction& f, double x) {
  std::vector<ExpSegment> out;
  out.reserve(f.segment_count());
  for (const auto& s : f.segments())
    out.push_back({s.t0 + x, s.t1 + x, s.c * unit_exp(-s.omega * x), s.omega});
  return PiecewiseExpFunction(std::move(out));
}

PiecewiseExpFunction modulate(const PiecewiseExpFunction& f, double omega) {
  std::vector<ExpSegment> out;
  out.reserve(f.segment_count());
  for (const auto& s : f.segments())
    out.push_back({s.t0, s.t1, s.c, s.omega + omega});
  return PiecewiseExpFunction(std::move(out));
}

PiecewiseExpFunction scale(const PiecewiseExpFunction& f, Complex c) {
  std::vector<ExpSegment> out;
  out.reserve(f.segment_count());
  for (const auto& s : f.segments()) out.push_back({s.t0, s.t1, s.c * c, s.omega});
  return PiecewiseExpFunction(std::move(out));
}

PiecewiseExpFunction dilate(const PiecewiseExpFunction& f, double a) {
  if (a == 0.0) throw std::invalid_argument("dilate: a must be nonzero");
  const double amp = 1.0 / std::sqrt(std::abs(a));
  std::vector<ExpSegment> out;
  out.reserve(f.segment_count());
  for (const auto& s : f.segments()) {
    double lo = a * s.t0, hi = a * s.t1;
    if (a < 0.0) std::swap(lo, hi);
    out.push_back({lo, hi, amp * s.c, s.omega / a});
  }
  return PiecewiseExpFunction(std::move(out));
}

PiecewiseExpFunction conjugate_fn(const PiecewiseExpFunction& f) {
  std::vector<ExpSegment> out;
  out.reserve(f.segment_count());
  for (const auto& s : f.segments())
    out.push_back({s.t0, s.t1, std::conj(s.c), -s.omega});
  return PiecewiseExpFunction(std::move(out));
}

PiecewiseExpFunction restrict_to(const PiecewiseExpFunction& f, double lo, double hi) {
  std::vector<ExpSegment> out;
  for (const auto& s : f.segments()) {
    const double a = std::max(s.t0, lo);
    const double b = std::min(s.t1, hi);
    if (a < b) out.push_back({a, b, s.c, s.omega});
  }
  return PiecewiseExpFunction(std::move(out));
}

PiecewiseExpFunction add(const PiecewiseExpFunction& f, const PiecewiseExpFunction& g) {
  std::vector<ExpSegment> out = f.segments();
  out.insert(out.end(), g.segments().begin(), g.segments().end());
  return PiecewiseExpFunction(std::move(out));
}

SampledFunction sample(const PiecewiseExpFunction& f, double start, double step,
                       std::size_t count) {
  if (!(step > 0.0)) throw std::invalid_argument("sample: step must be > 0");
  SampledFunction out{start, step, {}};
  out.samples.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.samples.push_back(f(start + i * step));
  return out;
}

Complex inner_product(const SampledFunction& f, const SampledFunction& g) {
  if (f.samples.size() != g.samples.size() || f.step != g.step || f.start != g.start)
    throw std::invalid_argument("sampled inner_product: incongruent grids");
  Complex total = 0.0;
  for (std::size_t i = 0; i < f.samples.size(); ++i)
    total += f.samples[i] * std::conj(g.samples[i]);
  return total * f.step;
}

}  // namespace hwave
