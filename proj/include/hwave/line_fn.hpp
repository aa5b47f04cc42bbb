#pragma once

#include <complex>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace hwave {

using Complex = std::complex<double>;

/// One segment of a piecewise-exponential function: the value is
/// c * e^{2 pi i omega t} on [t0, t1) and 0 elsewhere.
struct ExpSegment {
  double t0;
  double t1;
  Complex c;
  double omega;
};

/// Finite sum of complex-exponential segments on half-open intervals.
/// Overlapping segments sum pointwise.  This class is closed under the
/// Schrodinger representation, so every Gabor/Parseval computation on it
/// is free of discretization error.
class PiecewiseExpFunction {
 public:
  PiecewiseExpFunction() = default;
  explicit PiecewiseExpFunction(std::vector<ExpSegment> segments);

  /// The characteristic function of [t0, t1).
  static PiecewiseExpFunction indicator(double t0, double t1);

  const std::vector<ExpSegment>& segments() const { return segments_; }
  bool empty() const { return segments_.empty(); }
  std::size_t segment_count() const { return segments_.size(); }

  Complex operator()(double t) const;

  /// Support hull (smallest [lo, hi) containing all segments), or nullopt
  /// for the zero function.
  std::optional<std::pair<double, double>> support() const;

  /// Sorted segments split at all breakpoints, with identical frequencies
  /// on identical intervals combined; amplitudes below amp_tol dropped.
  PiecewiseExpFunction normal_form(double amp_tol = 0.0) const;

 private:
  std::vector<ExpSegment> segments_;
};

/// Exact L^2 pairing  integral of f(t) * conj(g(t)) dt.
Complex inner_product(const PiecewiseExpFunction& f, const PiecewiseExpFunction& g);
double norm_sq(const PiecewiseExpFunction& f);
double norm(const PiecewiseExpFunction& f);

/// (translate f)(t) = f(t - x)
PiecewiseExpFunction translate(const PiecewiseExpFunction& f, double x);
/// (modulate f)(t) = e^{2 pi i omega t} f(t)
PiecewiseExpFunction modulate(const PiecewiseExpFunction& f, double omega);
PiecewiseExpFunction scale(const PiecewiseExpFunction& f, Complex c);
/// (dilate f)(t) = |a|^{-1/2} f(t / a), a != 0
PiecewiseExpFunction dilate(const PiecewiseExpFunction& f, double a);
PiecewiseExpFunction conjugate_fn(const PiecewiseExpFunction& f);

/// Restriction of f to [lo, hi), still piecewise exponential.
PiecewiseExpFunction restrict_to(const PiecewiseExpFunction& f, double lo, double hi);

/// Sum of two functions (segment lists concatenate; overlaps sum).
PiecewiseExpFunction add(const PiecewiseExpFunction& f, const PiecewiseExpFunction& g);

/// Grid-sampled fallback for windows with no exact segment form.
struct SampledFunction {
  double start = 0.0;
  double step = 1.0;
  std::vector<Complex> samples;
};

SampledFunction sample(const PiecewiseExpFunction& f, double start, double step,
                       std::size_t count);

/// Rectangle-rule inner product; both grids must be congruent.
Complex inner_product(const SampledFunction& f, const SampledFunction& g);

}  // namespace hwave
