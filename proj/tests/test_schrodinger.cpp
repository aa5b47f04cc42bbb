#include <doctest.h>

#include "hwave/random_fn.hpp"
#include "hwave/schrodinger.hpp"

using namespace hwave;

namespace {

bool fn_close(const PiecewiseExpFunction& f, const PiecewiseExpFunction& g,
              double tol = 1e-12) {
  // compare by the polarization-free distance |f-g|^2 = |f|^2 + |g|^2 - 2Re<f,g>
  const double d = norm_sq(f) + norm_sq(g) - 2.0 * inner_product(f, g).real();
  return d < tol;
}

}  // namespace

TEST_CASE("generator formulas") {
  const auto chi = PiecewiseExpFunction::indicator(0.0, 1.0);
  const double lambda = 0.75;
  // pure translation
  const auto tx = apply_pi(lambda, {0.5, 0.0, 0.0}, chi);
  CHECK(fn_close(tx, translate(chi, 0.5)));
  // pure modulation: e^{-2 pi i lambda y t}
  const auto ty = apply_pi(lambda, {0.0, 2.0, 0.0}, chi);
  CHECK(fn_close(ty, modulate(chi, -lambda * 2.0)));
  // pure center: scalar e^{2 pi i lambda z}
  const auto tz = apply_pi(lambda, {0.0, 0.0, 1.0}, chi);
  CHECK(fn_close(tz, scale(chi, std::polar(1.0, 2.0 * 3.14159265358979323846 *
                                                    lambda))));
  CHECK_THROWS_AS(apply_pi(0.0, {1.0, 0.0, 0.0}, chi), std::invalid_argument);
}

TEST_CASE("representation property and unitarity") {
  auto rng = make_rng(31);
  for (int i = 0; i < 100; ++i) {
    const auto f = random_piecewise_fn(rng);
    const GroupElement g = random_group_element(rng, 2.0);
    const GroupElement h = random_group_element(rng, 2.0);
    const double lambda = std::uniform_real_distribution<double>(0.5, 1.0)(rng);
    CHECK(fn_close(apply_pi(lambda, multiply(g, h), f),
                   apply_pi(lambda, g, apply_pi(lambda, h, f)), 1e-11));
    CHECK(norm(apply_pi(lambda, g, f)) == doctest::Approx(norm(f)).epsilon(1e-12));
    CHECK(norm(apply_pi_bar(lambda, g, f)) ==
          doctest::Approx(norm(f)).epsilon(1e-12));
  }
}

TEST_CASE("contragredient is the conjugation sandwich") {
  auto rng = make_rng(32);
  for (int i = 0; i < 100; ++i) {
    const auto f = random_piecewise_fn(rng);
    const GroupElement g = random_group_element(rng, 2.0);
    const double lambda = std::uniform_real_distribution<double>(0.5, 1.0)(rng);
    const auto direct = apply_pi_bar(lambda, g, f);
    const auto sandwich =
        conjugate_fn(apply_pi(lambda, g, conjugate_fn(f)));
    CHECK(fn_close(direct, sandwich, 1e-12));
    // contragredient of a representation is a representation
    const GroupElement h = random_group_element(rng, 2.0);
    CHECK(fn_close(apply_pi_bar(lambda, multiply(g, h), f),
                   apply_pi_bar(lambda, g, apply_pi_bar(lambda, h, f)), 1e-11));
  }
}

TEST_CASE("dilation operator") {
  const auto chi = PiecewiseExpFunction::indicator(0.0, 1.0);
  const auto d2 = apply_dilation_C(std::sqrt(2.0), 2, chi);
  // two successive dilations by sqrt(2) give 2^{-1/2} chi_[0,2)
  CHECK(d2(1.0).real() == doctest::Approx(1.0 / std::sqrt(2.0)));
  CHECK(std::abs(d2(2.5)) == 0.0);
  CHECK(norm(d2) == doctest::Approx(1.0).epsilon(1e-13));
  const auto id = apply_dilation_C(std::sqrt(2.0), 0, chi);
  CHECK(fn_close(id, chi));
}

TEST_CASE("dilation intertwining") {
  auto rng = make_rng(33);
  const double a = std::sqrt(2.0), b = std::sqrt(2.0);
  const DilationAutomorphism A(a, b, 1);
  for (int i = 0; i < 100; ++i) {
    const auto f = random_piecewise_fn(rng);
    const GroupElement g = random_group_element(rng, 2.0);
    const double lambda = std::uniform_real_distribution<double>(0.25, 0.5)(rng);
    const auto lhs = apply_dilation_C(a, 1, apply_pi(2.0 * lambda, g, f));
    const auto rhs =
        apply_pi(lambda, conjugate(A, g), apply_dilation_C(a, 1, f));
    CHECK(fn_close(lhs, rhs, 1e-11));
  }
}

TEST_CASE("rank-one tensor action") {
  auto rng = make_rng(34);
  for (int i = 0; i < 100; ++i) {
    const RankOneOperator T{random_piecewise_fn(rng), random_piecewise_fn(rng)};
    const RankOneOperator S{random_piecewise_fn(rng), random_piecewise_fn(rng)};
    const GroupElement kappa = random_group_element(rng, 2.0);
    const GroupElement eta = random_group_element(rng, 2.0);
    const double lambda = std::uniform_real_distribution<double>(0.5, 1.0)(rng);

    const RankOneOperator TT = tensor_apply(lambda, kappa, eta, T);
    CHECK(hs_norm_sq(TT) == doctest::Approx(hs_norm_sq(T)).epsilon(1e-11));
    // rank-one pairing identity against direct inner products
    const Complex lhs = hs_inner(TT, S);
    const Complex rhs = inner_product(apply_pi(lambda, kappa, T.u), S.u) *
                        inner_product(S.v, apply_pi_bar(lambda, eta, T.v));
    CHECK(std::abs(lhs - rhs) < 1e-11);
    // HS product structure
    CHECK(std::abs(hs_inner(T, S) -
                   inner_product(T.u, S.u) * inner_product(S.v, T.v)) < 1e-12);
    CHECK(std::abs(hs_inner(T, T).real() - hs_norm_sq(T)) < 1e-12);
  }
}
