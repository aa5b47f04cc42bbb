#include "hwave/plancherel.hpp"

#include <gsl/gsl_integration.h>

#include <algorithm>
#include <cmath>
#include <memory>
#include <numbers>

namespace hwave {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

enum class NodeRelation { equal, disjoint, mixed };

NodeRelation compare_nodes(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() == b.size()) {
    bool equal = true;
    for (std::size_t i = 0; i < a.size(); ++i)
      if (std::abs(a[i] - b[i]) > 1e-12 * std::max(1.0, std::abs(a[i]))) {
        equal = false;
        break;
      }
    if (equal) return NodeRelation::equal;
  }
  for (double x : a)
    for (double y : b)
      if (std::abs(x - y) <= 1e-12 * std::max(1.0, std::abs(x)))
        return NodeRelation::mixed;
  return NodeRelation::disjoint;
}

}  // namespace

QuadratureGrid make_grid(const IntervalUnion& set, const GridSpec& spec) {
  if (spec.nodes_per_interval < 1)
    throw std::invalid_argument("make_grid: nodes_per_interval must be >= 1");
  QuadratureGrid grid;
  const std::size_t n = static_cast<std::size_t>(spec.nodes_per_interval);
  if (spec.rule == QuadratureRule::gauss) {
    grid.rule = "gauss" + std::to_string(n);
    std::unique_ptr<gsl_integration_glfixed_table,
                    decltype(&gsl_integration_glfixed_table_free)>
        table(gsl_integration_glfixed_table_alloc(n),
              &gsl_integration_glfixed_table_free);
    for (const auto& [lo, hi] : set.intervals()) {
      for (std::size_t i = 0; i < n; ++i) {
        double x, w;
        gsl_integration_glfixed_point(lo, hi, i, &x, &w, table.get());
        grid.nodes.push_back(x);
        grid.weights.push_back(w);
      }
    }
  } else {
    grid.rule = "midpoint" + std::to_string(n);
    for (const auto& [lo, hi] : set.intervals()) {
      const double h = (hi - lo) / static_cast<double>(n);
      for (std::size_t i = 0; i < n; ++i) {
        grid.nodes.push_back(lo + (static_cast<double>(i) + 0.5) * h);
        grid.weights.push_back(h);
      }
    }
  }
  return grid;
}

RankOneField shannon_field(const IntervalUnion& set, const GridSpec& spec) {
  RankOneField field;
  field.set = set;
  field.grid = make_grid(set, spec);
  field.ops.reserve(field.grid.nodes.size());
  for (double lambda : field.grid.nodes) {
    if (std::abs(lambda) > 1.0 + 1e-12)
      throw std::invalid_argument(
          "shannon_field: node with |lambda| > 1 (density condition fails)");
    const PiecewiseExpFunction w =
        scale(PiecewiseExpFunction::indicator(0.0, 1.0),
              std::pow(std::abs(lambda), 0.25));
    field.ops.push_back({w, w});
  }
  return field;
}

double field_norm_sq(const RankOneField& f) {
  double total = 0.0;
  for (std::size_t j = 0; j < f.size(); ++j)
    total += f.grid.weights[j] * hs_norm_sq(f.ops[j]) * std::abs(f.grid.nodes[j]);
  return total;
}

Complex field_inner(const RankOneField& f, const RankOneField& g) {
  switch (compare_nodes(f.grid.nodes, g.grid.nodes)) {
    case NodeRelation::disjoint:
      return 0.0;
    case NodeRelation::mixed:
      throw std::invalid_argument("field_inner: incommensurate grids");
    case NodeRelation::equal:
      break;
  }
  Complex total = 0.0;
  for (std::size_t j = 0; j < f.size(); ++j)
    total += f.grid.weights[j] * hs_inner(f.ops[j], g.ops[j]) *
             std::abs(f.grid.nodes[j]);
  return total;
}

Complex inverse_transform(const RankOneField& f, const GroupElement& g) {
  Complex total = 0.0;
  for (std::size_t j = 0; j < f.size(); ++j) {
    const double lambda = f.grid.nodes[j];
    total += f.grid.weights[j] *
             inner_product(f.ops[j].u, apply_pi(lambda, g, f.ops[j].v)) *
             std::abs(lambda);
  }
  return total;
}

Complex eval_example_closed_form(double x, double y, double z,
                                 const IntervalUnion& set, const GridSpec& spec) {
  if (std::abs(x) >= 1.0) return 0.0;
  const QuadratureGrid grid = make_grid(set, spec);
  if (y == 0.0) {
    // On the Shannon band the lambda integral of |lambda|^{3/2} is
    // (8 - sqrt 2)/10; the branch is stated without z dependence.
    double c = 0.0;
    for (std::size_t j = 0; j < grid.nodes.size(); ++j)
      c += grid.weights[j] * std::pow(std::abs(grid.nodes[j]), 1.5);
    return c * (1.0 - std::abs(x));
  }
  Complex total = 0.0;
  for (std::size_t j = 0; j < grid.nodes.size(); ++j) {
    const double lambda = grid.nodes[j];
    const double w32 = std::pow(std::abs(lambda), 1.5);
    Complex numer;
    if (x >= 0.0)
      numer = std::polar(1.0, kTwoPi * lambda * (y - z)) -
              std::polar(1.0, kTwoPi * lambda * (y * x - z));
    else
      numer = std::polar(1.0, kTwoPi * lambda * (y * (x + 1.0) - z)) -
              std::polar(1.0, -kTwoPi * lambda * z);
    total += grid.weights[j] * numer * w32 / Complex(0.0, kTwoPi * lambda * y);
  }
  return total;
}

RankOneField dilate_field(const RankOneField& f, const DilationAutomorphism& d) {
  const int m = d.m();
  const double two_pow_m = std::ldexp(1.0, m);
  RankOneField out;
  out.set = dyadic_scale(f.set, -m);
  out.grid.rule = f.grid.rule;
  out.grid.nodes.reserve(f.size());
  out.grid.weights.reserve(f.size());
  out.ops.reserve(f.size());
  for (std::size_t j = 0; j < f.size(); ++j) {
    out.grid.nodes.push_back(f.grid.nodes[j] / two_pow_m);
    out.grid.weights.push_back(f.grid.weights[j] / two_pow_m);
    out.ops.push_back(
        {scale(apply_dilation_C(d.a(), m, f.ops[j].u), two_pow_m),
         apply_dilation_C(d.a(), m, f.ops[j].v)});
  }
  return out;
}

PiecewiseExpFunction restrict_to(const PiecewiseExpFunction& f,
                                 const IntervalUnion& set) {
  PiecewiseExpFunction out;
  for (const auto& [lo, hi] : set.intervals())
    out = add(out, restrict_to(f, lo, hi));
  return out;
}

double character_basis_parseval(const IntervalUnion& set,
                                const PiecewiseExpFunction& F, int K) {
  if (K < 0) throw std::invalid_argument("character_basis_parseval: K must be >= 0");
  if (!is_translation_congruent_unit(set).congruent)
    throw std::invalid_argument(
        "character_basis_parseval: set not translation congruent to (0,1]");
  const PiecewiseExpFunction Fs = restrict_to(F, set);
  const double denom = norm_sq(Fs);
  if (!(denom > 0.0))
    throw std::invalid_argument("character_basis_parseval: F vanishes on the set");
  double sum = 0.0;
  PiecewiseExpFunction chi;
  for (const auto& [lo, hi] : set.intervals())
    chi = add(chi, PiecewiseExpFunction::indicator(lo, hi));
  for (int k = -K; k <= K; ++k) {
    // c_k = int_S F(lambda) e^{2 pi i k lambda} d lambda, exact
    const Complex c = inner_product(Fs, modulate(chi, -static_cast<double>(k)));
    sum += std::norm(c);
  }
  return std::abs(sum / denom - 1.0);
}

}  // namespace hwave
