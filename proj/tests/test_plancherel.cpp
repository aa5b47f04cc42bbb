#include <doctest.h>

#include <cstdio>
#include <filesystem>

#include "hwave/plancherel.hpp"
#include "hwave/random_fn.hpp"
#include "hwave/serialization.hpp"

using namespace hwave;

TEST_CASE("grid construction") {
  const auto set = IntervalUnion::shannon_band();
  const auto g = make_grid(set, {QuadratureRule::gauss, 16});
  CHECK(g.nodes.size() == 32);
  CHECK(g.rule == "gauss16");
  double total = 0.0;
  for (double w : g.weights) total += w;
  CHECK(total == doctest::Approx(set.measure()).epsilon(1e-13));
  for (double n : g.nodes) CHECK(std::abs(n) > 0.5);

  const auto m = make_grid(set, {QuadratureRule::midpoint, 10});
  CHECK(m.rule == "midpoint10");
  CHECK(m.nodes.size() == 20);
  // Gauss integrates lambda^2 over the band exactly
  double gl = 0.0;
  for (std::size_t i = 0; i < g.nodes.size(); ++i)
    gl += g.weights[i] * g.nodes[i] * g.nodes[i];
  CHECK(gl == doctest::Approx(7.0 / 12.0).epsilon(1e-14));
}

TEST_CASE("shannon field norms") {
  const auto f = shannon_field(IntervalUnion::shannon_band(),
                               {QuadratureRule::gauss, 32});
  CHECK(field_norm_sq(f) == doctest::Approx(7.0 / 12.0).epsilon(1e-12));
  CHECK(field_norm_sq(f) <= 2.0 / 3.0);
  for (std::size_t i = 0; i < f.size(); ++i)
    CHECK(norm_sq(f.ops[i].u) ==
          doctest::Approx(std::sqrt(std::abs(f.grid.nodes[i]))).epsilon(1e-12));
  CHECK_THROWS_AS(shannon_field(IntervalUnion({{1.0, 1.5}}),
                                {QuadratureRule::gauss, 8}),
                  std::invalid_argument);
}

TEST_CASE("inverse transform golden values") {
  const auto f = shannon_field(IntervalUnion::shannon_band(),
                               {QuadratureRule::gauss, 64});
  const Complex at0 = inverse_transform(f, {0.0, 0.0, 0.0});
  CHECK(at0.real() ==
        doctest::Approx((8.0 - std::sqrt(2.0)) / 10.0).epsilon(1e-10));
  CHECK(std::abs(at0.imag()) < 1e-12);
  for (double x : {1.0, -1.0, 1.5, -2.0})
    CHECK(std::abs(inverse_transform(f, {x, 0.3, 0.1})) < 1e-10);
  // y = 0 branch is linear in x
  const Complex half = inverse_transform(f, {0.5, 0.0, 0.0});
  CHECK(half.real() ==
        doctest::Approx((8.0 - std::sqrt(2.0)) * 0.5 / 10.0).epsilon(1e-9));
}

TEST_CASE("closed form matches quadrature transform") {
  const auto set = IntervalUnion::shannon_band();
  const GridSpec spec{QuadratureRule::gauss, 64};
  const auto f = shannon_field(set, spec);
  auto rng = make_rng(51);
  std::uniform_real_distribution<double> dx(-0.99, 0.99);
  std::uniform_real_distribution<double> dyz(-2.0, 2.0);
  for (int i = 0; i < 50; ++i) {
    const double x = dx(rng), y = dyz(rng), z = dyz(rng);
    const Complex lhs = inverse_transform(f, {x, y, z});
    const Complex rhs = eval_example_closed_form(x, y, z, set, spec);
    CHECK(std::abs(lhs - rhs) < 1e-10);
  }
}

TEST_CASE("field inner product node discipline") {
  const auto set = IntervalUnion::shannon_band();
  const auto f = shannon_field(set, {QuadratureRule::gauss, 16});
  const auto g = shannon_field(dyadic_scale(set, -1), {QuadratureRule::gauss, 16});
  CHECK(std::abs(field_inner(f, f).real() - field_norm_sq(f)) < 1e-12);
  CHECK(field_inner(f, g) == Complex(0.0));  // disjoint bands
  // shares exactly the positive-band nodes with f: partial overlap rejected
  const auto h = shannon_field(IntervalUnion({{0.5, 1.0}}),
                               {QuadratureRule::gauss, 16});
  CHECK_THROWS_AS(field_inner(f, h), std::invalid_argument);
}

TEST_CASE("dilation covariance of fields") {
  const auto set = IntervalUnion::shannon_band();
  const auto f = shannon_field(set, {QuadratureRule::gauss, 32});
  const DilationAutomorphism d(std::sqrt(2.0), std::sqrt(2.0), 1);
  const auto fd = dilate_field(f, d);
  // nodes move to 2^{-m} lambda, norm is preserved
  CHECK(fd.grid.nodes[0] == doctest::Approx(0.5 * f.grid.nodes[0]));
  CHECK(field_norm_sq(fd) == doctest::Approx(field_norm_sq(f)).epsilon(1e-12));
  // group-side covariance: f_d(g) = 2^{-m} f(A^{-m} g A^{m})
  auto rng = make_rng(52);
  for (int i = 0; i < 20; ++i) {
    const GroupElement g = random_group_element(rng, 1.5);
    const Complex lhs = inverse_transform(fd, g);
    const Complex rhs =
        0.5 * inverse_transform(f, conjugate(d.inverse(), g));
    CHECK(std::abs(lhs - rhs) < 1e-8);
  }
}

TEST_CASE("character basis parseval") {
  auto rng = make_rng(53);
  const auto set = IntervalUnion::shannon_band();
  const auto F = random_band_fn(rng, set);
  const double d500 = character_basis_parseval(set, F, 500);
  const double d1000 = character_basis_parseval(set, F, 1000);
  CHECK(d500 < 1e-3);
  CHECK(d1000 < d500);
  CHECK_THROWS_AS(
      character_basis_parseval(IntervalUnion({{0.0, 0.5}}), F, 10),
      std::invalid_argument);
}

TEST_CASE("serialization round trip") {
  const auto f = shannon_field(IntervalUnion::shannon_band(),
                               {QuadratureRule::gauss, 8});
  const std::string path =
      (std::filesystem::temp_directory_path() / "hwave_field.json").string();
  save_field(f, path);
  const auto g = load_field(path);
  std::remove(path.c_str());
  REQUIRE(g.size() == f.size());
  CHECK(g.grid.rule == f.grid.rule);
  for (std::size_t i = 0; i < f.size(); ++i) {
    CHECK(g.grid.nodes[i] == doctest::Approx(f.grid.nodes[i]).epsilon(1e-15));
    CHECK(norm_sq(g.ops[i].u) ==
          doctest::Approx(norm_sq(f.ops[i].u)).epsilon(1e-15));
  }
  CHECK(std::abs(field_inner(f, g).real() - field_norm_sq(f)) < 1e-12);
  CHECK_THROWS_AS(load_field("/nonexistent/nowhere.json"), std::runtime_error);
}

TEST_CASE("restriction to a set") {
  const PiecewiseExpFunction F({{-1.0, 1.0, 1.0, 0.3}});
  const auto r = hwave::restrict_to(F, IntervalUnion::shannon_band());
  CHECK(norm_sq(r) == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(std::abs(r(0.25)) == 0.0);
  CHECK(std::abs(r(0.75) - F(0.75)) < 1e-14);
}
