#include "hwave/schrodinger.hpp"

#include <cmath>
#include <numbers>

namespace hwave {

namespace {

void require_nonzero_lambda(double lambda) {
  if (lambda == 0.0)
    throw std::invalid_argument("schrodinger: lambda must be nonzero");
}

}  // namespace

PiecewiseExpFunction apply_pi(double lambda, const GroupElement& g,
                              const PiecewiseExpFunction& f) {
  require_nonzero_lambda(lambda);
  // Factorization order z, then y, then x matches M(x,y,z) = exp(zZ)exp(yY)exp(xX).
  PiecewiseExpFunction out = translate(f, g.x);
  out = modulate(out, -lambda * g.y);
  return scale(out, std::polar(1.0, 2.0 * std::numbers::pi * lambda * g.z));
}

PiecewiseExpFunction apply_pi_bar(double lambda, const GroupElement& g,
                                  const PiecewiseExpFunction& f) {
  require_nonzero_lambda(lambda);
  return conjugate_fn(apply_pi(lambda, g, conjugate_fn(f)));
}

PiecewiseExpFunction apply_dilation_C(double a, int m, const PiecewiseExpFunction& f) {
  if (a == 0.0) throw std::invalid_argument("apply_dilation_C: a must be nonzero");
  const double factor = m >= 0 ? a : 1.0 / a;
  PiecewiseExpFunction out = f;
  for (int i = 0; i < std::abs(m); ++i) out = dilate(out, factor);
  return out;
}

RankOneOperator tensor_apply(double lambda, const GroupElement& kappa,
                             const GroupElement& eta, const RankOneOperator& T) {
  require_nonzero_lambda(lambda);
  return {apply_pi(lambda, kappa, T.u), apply_pi_bar(lambda, eta, T.v)};
}

Complex hs_inner(const RankOneOperator& T1, const RankOneOperator& T2) {
  return inner_product(T1.u, T2.u) * inner_product(T2.v, T1.v);
}

double hs_norm_sq(const RankOneOperator& T) {
  return norm_sq(T.u) * norm_sq(T.v);
}

double hs_norm(const RankOneOperator& T) { return std::sqrt(hs_norm_sq(T)); }

}  // namespace hwave
