#include "hwave/frame_engine.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <thread>

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

struct IRange {
  long long lo = 0, hi = -1;
  bool empty() const { return hi < lo; }
  long long count() const { return empty() ? 0 : hi - lo + 1; }
};

// Integer shifts with supp(a) intersecting supp(b) + n, widened by one.
IRange shift_range(const PiecewiseExpFunction& a, const PiecewiseExpFunction& b) {
  const auto sa = a.support();
  const auto sb = b.support();
  if (!sa || !sb) return {};
  return {static_cast<long long>(std::floor(sa->first - sb->second)) - 1,
          static_cast<long long>(std::ceil(sa->second - sb->first)) + 1};
}

IRange union_range(IRange a, IRange b) {
  if (a.empty()) return b;
  if (b.empty()) return a;
  return {std::min(a.lo, b.lo), std::max(a.hi, b.hi)};
}

IRange clip(IRange r, long long bound) {
  return {std::max(r.lo, -bound), std::min(r.hi, bound)};
}

void run_chunked(std::size_t count, int threads, const auto& body) {
  if (threads <= 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::vector<std::thread> pool;
  std::size_t n = static_cast<std::size_t>(threads);
  for (std::size_t t = 0; t < n; ++t)
    pool.emplace_back([&, t] {
      for (std::size_t i = t; i < count; i += n) body(i);
    });
  for (auto& th : pool) th.join();
}

}  // namespace

Complex analysis_coefficient(const RankOneField& h, const RankOneField& f,
                             const LambdaPair& p, int m,
                             const DilationAutomorphism& d) {
  if (p.right.k1 != 0)
    throw std::invalid_argument("analysis_coefficient: right factor needs k1 = 0");
  const RankOneField fm = dilate_field(f, DilationAutomorphism(d.a(), d.b(), m));
  switch (compare_nodes(h.grid.nodes, fm.grid.nodes)) {
    case NodeRelation::disjoint:
      return 0.0;
    case NodeRelation::mixed:
      throw std::invalid_argument("analysis_coefficient: incommensurate grids");
    case NodeRelation::equal:
      break;
  }
  const GroupElement gamma = group_element(p.left);
  const GroupElement eta = group_element(p.right);
  Complex total = 0.0;
  for (std::size_t j = 0; j < h.size(); ++j) {
    const double lambda = h.grid.nodes[j];
    total += h.grid.weights[j] * std::abs(lambda) *
             inner_product(h.ops[j].u, apply_pi(lambda, gamma, fm.ops[j].u)) *
             inner_product(apply_pi_bar(lambda, eta, fm.ops[j].v), h.ops[j].v);
  }
  return total;
}

ParsevalSumResult parseval_sum(const RankOneField& h, const RankOneField& f,
                               const FrameConfig& cfg,
                               const DilationAutomorphism& d) {
  ParsevalSumResult res;
  res.norm_sq = field_norm_sq(h);
  for (int m = cfg.m_lo; m <= cfg.m_hi; ++m) {
    const RankOneField fm = dilate_field(f, DilationAutomorphism(d.a(), d.b(), m));
    switch (compare_nodes(h.grid.nodes, fm.grid.nodes)) {
      case NodeRelation::disjoint:
        continue;
      case NodeRelation::mixed:
        throw std::invalid_argument("parseval_sum: incommensurate grids");
      case NodeRelation::equal:
        break;
    }
    const std::size_t J = h.size();

    IRange k3r, m3r;
    for (std::size_t j = 0; j < J; ++j) {
      k3r = union_range(k3r, shift_range(h.ops[j].u, fm.ops[j].u));
      m3r = union_range(m3r, shift_range(h.ops[j].v, fm.ops[j].v));
    }
    k3r = clip(k3r, cfg.bounds.k3);
    m3r = clip(m3r, cfg.bounds.m3);
    if (k3r.empty() || m3r.empty()) continue;

    const long long K2 = cfg.bounds.k2, M2 = cfg.bounds.m2, K1 = cfg.bounds.k1;
    const std::size_t nk2 = static_cast<std::size_t>(2 * K2 + 1);
    const std::size_t nm2 = static_cast<std::size_t>(2 * M2 + 1);
    const std::size_t nk3 = static_cast<std::size_t>(k3r.count());
    const std::size_t nm3 = static_cast<std::size_t>(m3r.count());

    // U[(k3,k2)][j] = <u_h, pi_lambda((k3,k2,0)) u'>;  V likewise for the
    // contragredient against v_h.
    std::vector<std::vector<Complex>> U(nk3 * nk2, std::vector<Complex>(J));
    std::vector<std::vector<Complex>> V(nm3 * nm2, std::vector<Complex>(J));
    for (std::size_t j = 0; j < J; ++j) {
      const double lambda = h.grid.nodes[j];
      for (long long k3 = k3r.lo; k3 <= k3r.hi; ++k3) {
        const PiecewiseExpFunction tr =
            translate(fm.ops[j].u, static_cast<double>(k3));
        for (long long k2 = -K2; k2 <= K2; ++k2) {
          const std::size_t idx = static_cast<std::size_t>(k3 - k3r.lo) * nk2 +
                                  static_cast<std::size_t>(k2 + K2);
          U[idx][j] = inner_product(
              h.ops[j].u, modulate(tr, -lambda * static_cast<double>(k2)));
        }
      }
      const PiecewiseExpFunction cv = conjugate_fn(fm.ops[j].v);
      const PiecewiseExpFunction cvh = conjugate_fn(h.ops[j].v);
      for (long long m3 = m3r.lo; m3 <= m3r.hi; ++m3) {
        const PiecewiseExpFunction trv = translate(cv, static_cast<double>(m3));
        for (long long m2 = -M2; m2 <= M2; ++m2) {
          const std::size_t idx = static_cast<std::size_t>(m3 - m3r.lo) * nm2 +
                                  static_cast<std::size_t>(m2 + M2);
          // <pi_bar(eta) v', v_h> = conj(<pi(eta) conj v', conj v_h>)
          V[idx][j] = std::conj(inner_product(
              modulate(trv, -lambda * static_cast<double>(m2)), cvh));
        }
      }
    }

    // phase[k1+K1][j] = e^{-2 pi i lambda_j k1}
    std::vector<std::vector<Complex>> phase(
        static_cast<std::size_t>(2 * K1 + 1), std::vector<Complex>(J));
    for (long long k1 = -K1; k1 <= K1; ++k1)
      for (std::size_t j = 0; j < J; ++j)
        phase[static_cast<std::size_t>(k1 + K1)][j] = std::polar(
            1.0, -kTwoPi * h.grid.nodes[j] * static_cast<double>(k1));

    std::vector<double> wgt(J);
    for (std::size_t j = 0; j < J; ++j)
      wgt[j] = h.grid.weights[j] * std::abs(h.grid.nodes[j]);

    const std::size_t combos = U.size() * V.size();
    std::vector<double> per_combo(combos, 0.0);
    run_chunked(combos, cfg.threads, [&](std::size_t ci) {
      const std::vector<Complex>& uu = U[ci / V.size()];
      const std::vector<Complex>& vv = V[ci % V.size()];
      std::vector<Complex> base(J);
      for (std::size_t j = 0; j < J; ++j) base[j] = wgt[j] * uu[j] * vv[j];
      double acc = 0.0;
      for (const auto& ph : phase) {
        Complex c = 0.0;
        for (std::size_t j = 0; j < J; ++j) c += ph[j] * base[j];
        acc += std::norm(c);
      }
      per_combo[ci] = acc;
    });
    for (double x : per_combo) res.sum += x;
  }
  res.defect = std::abs(res.sum - res.norm_sq) / res.norm_sq;
  return res;
}

double per_lambda_tensor_parseval(const RankOneField& f, std::size_t node_index,
                                  const RankOneOperator& T, int K) {
  if (node_index >= f.size())
    throw std::invalid_argument("per_lambda_tensor_parseval: node out of range");
  const double tsq = hs_norm_sq(T);
  if (!(tsq > 0.0))
    throw std::invalid_argument("per_lambda_tensor_parseval: zero operator");
  const double lambda = f.grid.nodes[node_index];
  const double s = std::pow(std::abs(lambda), 0.25);
  const PiecewiseExpFunction su = scale(f.ops[node_index].u, s);
  const PiecewiseExpFunction sv = scale(f.ops[node_index].v, s);

  // Rank-one split: Gabor sum in kappa against u, contragredient sum in
  // eta against v; the five-index tensor sum is their product.
  const GaborLattice lat(1.0, lambda);
  const double gu = gabor_frame_sum(T.u, su, lat, K);

  double gv = 0.0;
  const IRange m3r = shift_range(T.v, sv);
  const PiecewiseExpFunction csv = conjugate_fn(sv);
  const PiecewiseExpFunction cTv = conjugate_fn(T.v);
  for (long long m3 = m3r.lo; m3 <= m3r.hi; ++m3) {
    const PiecewiseExpFunction trv = translate(csv, static_cast<double>(m3));
    for (long long m2 = -K; m2 <= K; ++m2)
      gv += std::norm(inner_product(
          modulate(trv, -lambda * static_cast<double>(m2)), cTv));
  }
  return std::abs(gu * gv - tsq) / tsq;
}

double lemma_lem_check(double lambda, const PiecewiseExpFunction& v,
                       const PiecewiseExpFunction& u, int K) {
  const GaborLattice lat(1.0, lambda);
  if (tiling_parseval_check(conjugate_fn(v), lat) != TilingCheck::parseval)
    throw std::invalid_argument(
        "lemma_lem_check: G(conj v, Z x lambda Z) is not a Parseval frame");
  const double usq = norm_sq(u);
  if (!(usq > 0.0)) throw std::invalid_argument("lemma_lem_check: u = 0");
  double sum = 0.0;
  const IRange m3r = shift_range(u, v);
  for (long long m3 = m3r.lo; m3 <= m3r.hi; ++m3)
    for (long long m2 = -K; m2 <= K; ++m2) {
      const GroupElement eta{static_cast<double>(m3), static_cast<double>(m2), 0.0};
      sum += std::norm(inner_product(apply_pi_bar(lambda, eta, v), u));
    }
  return std::abs(sum - usq) / usq;
}

Reconstruction reconstruct(const RankOneField& h, const RankOneField& f,
                           const FrameConfig& cfg, const DilationAutomorphism& d) {
  Reconstruction rec;
  const double hsq = field_norm_sq(h);
  const std::vector<LambdaPair> pairs = enumerate_lambda(cfg.bounds);

  for (int m = cfg.m_lo; m <= cfg.m_hi; ++m) {
    const RankOneField fm = dilate_field(f, DilationAutomorphism(d.a(), d.b(), m));
    const NodeRelation rel = compare_nodes(h.grid.nodes, fm.grid.nodes);
    if (rel == NodeRelation::mixed)
      throw std::invalid_argument("reconstruct: incommensurate grids");
    if (rel == NodeRelation::disjoint) {
      rec.coefficients.insert(rec.coefficients.end(), pairs.size(), Complex(0.0));
      continue;
    }
    const std::size_t J = h.size();
    const std::size_t N = pairs.size();

    // Atom images per node, then coefficients and the atom Gram matrix.
    std::vector<std::vector<RankOneOperator>> atom(N, std::vector<RankOneOperator>());
    for (std::size_t i = 0; i < N; ++i) {
      atom[i].reserve(J);
      const GroupElement gamma = group_element(pairs[i].left);
      const GroupElement eta = group_element(pairs[i].right);
      for (std::size_t j = 0; j < J; ++j)
        atom[i].push_back(tensor_apply(h.grid.nodes[j], gamma, eta, fm.ops[j]));
    }
    std::vector<double> wgt(J);
    for (std::size_t j = 0; j < J; ++j)
      wgt[j] = h.grid.weights[j] * std::abs(h.grid.nodes[j]);

    std::vector<Complex> coef(N, 0.0);
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < J; ++j)
        coef[i] += wgt[j] * hs_inner(h.ops[j], atom[i][j]);

    double syn = 0.0;
    std::vector<double> per_row(N, 0.0);
    run_chunked(N, cfg.threads, [&](std::size_t i) {
      Complex acc = 0.0;
      for (std::size_t l = 0; l < N; ++l) {
        Complex g = 0.0;
        for (std::size_t j = 0; j < J; ++j)
          g += wgt[j] * hs_inner(atom[i][j], atom[l][j]);
        acc += coef[i] * std::conj(coef[l]) * g;
      }
      per_row[i] = acc.real();
    });
    for (double x : per_row) syn += x;
    rec.synthesis_norm_sq += syn;
    for (const Complex& c : coef) rec.coefficient_energy += std::norm(c);
    rec.coefficients.insert(rec.coefficients.end(), coef.begin(), coef.end());
  }

  rec.parseval_residual_sq = hsq - rec.coefficient_energy;
  const double rsq =
      hsq - 2.0 * rec.coefficient_energy + rec.synthesis_norm_sq;
  rec.residual = std::sqrt(std::max(0.0, rsq));
  return rec;
}

}  // namespace hwave
