#pragma once

#include "hwave/heis.hpp"
#include "hwave/line_fn.hpp"

namespace hwave {

/// The operator w -> <w,v> u, written u (x) v.
struct RankOneOperator {
  PiecewiseExpFunction u;
  PiecewiseExpFunction v;
};

/// pi_lambda(M(x,y,z)) f (t) = e^{2 pi i lambda z} e^{-2 pi i lambda y t} f(t - x).
/// lambda = 0 is not in the parametrizing set and is rejected.
PiecewiseExpFunction apply_pi(double lambda, const GroupElement& g,
                              const PiecewiseExpFunction& f);

/// Contragredient, realized as the conjugation sandwich conj . pi(g) . conj
/// (equal to pi(g^{-1})^tr for these integral-kernel unitaries).
PiecewiseExpFunction apply_pi_bar(double lambda, const GroupElement& g,
                                  const PiecewiseExpFunction& f);

/// m-fold composition of C(A) phi (t) = |a|^{-1/2} phi(a^{-1} t).
PiecewiseExpFunction apply_dilation_C(double a, int m, const PiecewiseExpFunction& f);

/// [pi(kappa) (x) pi_bar(eta)] (u (x) v) = pi(kappa)u (x) pi_bar(eta)v.
RankOneOperator tensor_apply(double lambda, const GroupElement& kappa,
                             const GroupElement& eta, const RankOneOperator& T);

/// <u (x) v, w (x) y>_HS = <u,w> <y,v>  (second slot antilinear so that
/// hs_inner(T,T) = |T|_HS^2).
Complex hs_inner(const RankOneOperator& T1, const RankOneOperator& T2);
double hs_norm_sq(const RankOneOperator& T);
double hs_norm(const RankOneOperator& T);

}  // namespace hwave
