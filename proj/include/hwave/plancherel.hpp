#pragma once

#include <string>

#include "hwave/heis.hpp"
#include "hwave/schrodinger.hpp"
#include "hwave/spectral_set.hpp"

namespace hwave {

enum class QuadratureRule { gauss, midpoint };

struct GridSpec {
  QuadratureRule rule = QuadratureRule::gauss;
  int nodes_per_interval = 64;
};

/// Lambda nodes and weights discretizing the Plancherel measure carrier set;
/// the |lambda| weight is applied by the consumers, not baked into weights.
struct QuadratureGrid {
  std::vector<double> nodes;
  std::vector<double> weights;
  std::string rule;
};

QuadratureGrid make_grid(const IntervalUnion& set, const GridSpec& spec);

/// Measurable field of rank-one operators u_lambda (x) v_lambda over a
/// spectral set, sampled on a quadrature grid.
struct RankOneField {
  IntervalUnion set;
  QuadratureGrid grid;
  std::vector<RankOneOperator> ops;  // one per node

  std::size_t size() const { return grid.nodes.size(); }
};

/// The example wavelet: u_lambda = v_lambda = |lambda|^{1/4} chi_[0,1) at
/// every node.  Nodes with |lambda| > 1 are rejected (the lattice density
/// condition fails there).
RankOneField shannon_field(const IntervalUnion& set, const GridSpec& spec);

/// Quadrature of |u|^2 |v|^2 |lambda| over the grid.
double field_norm_sq(const RankOneField& f);

/// L^2(H) pairing of two fields computed spectrally.  Exactly 0 when the
/// node sets are disjoint; throws if they partially overlap.
Complex field_inner(const RankOneField& f, const RankOneField& g);

/// Group Fourier inverse transform by quadrature:
/// sum_j w_j <u_j, pi_{lambda_j}(g) v_j> |lambda_j|.
Complex inverse_transform(const RankOneField& f, const GroupElement& g);

/// The example wavelet's piecewise formula: oscillatory lambda-integral over
/// the set for y != 0, the linear-in-x branch for y = 0 (z-independent, as
/// stated; valid at z = 0), and 0 for |x| >= 1.
Complex eval_example_closed_form(double x, double y, double z,
                                 const IntervalUnion& set, const GridSpec& spec);

/// Covariance transport: new node 2^{-m} lambda with weight 2^{-m} w,
/// u' = 2^m C(A^m) u, v' = C(A^m) v.
RankOneField dilate_field(const RankOneField& f, const DilationAutomorphism& d);

/// |sum_{|k|<=K} |c_k|^2 / |F|^2 - 1| with c_k = int_S e^{2 pi i lambda k} F,
/// all integrals exact on the piecewise-exponential class.  Requires S
/// translation congruent to (0,1].
double character_basis_parseval(const IntervalUnion& set,
                                const PiecewiseExpFunction& F, int K);

PiecewiseExpFunction restrict_to(const PiecewiseExpFunction& f,
                                 const IntervalUnion& set);

}  // namespace hwave
