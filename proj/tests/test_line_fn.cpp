#include <doctest.h>

#include <numbers>

#include "hwave/line_fn.hpp"
#include "hwave/random_fn.hpp"

using namespace hwave;

TEST_CASE("indicator basics") {
  const auto chi = PiecewiseExpFunction::indicator(0.0, 1.0);
  CHECK(norm_sq(chi) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(chi(0.5) == Complex(1.0));
  CHECK(chi(1.5) == Complex(0.0));
  CHECK(chi(-0.1) == Complex(0.0));
  CHECK_THROWS_AS(PiecewiseExpFunction({{1.0, 0.0, 1.0, 0.0}}),
                  std::invalid_argument);
}

TEST_CASE("exact oscillatory inner product") {
  const auto chi = PiecewiseExpFunction::indicator(0.0, 1.0);
  // <chi, e^{pi i t} chi> = (e^{-pi i} - 1)/(-pi i) = -2i/pi
  const Complex v = inner_product(chi, modulate(chi, 0.5));
  CHECK(v.real() == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(v.imag() == doctest::Approx(-2.0 / std::numbers::pi).epsilon(1e-14));
  // integer frequency offset integrates to zero
  const Complex z = inner_product(chi, modulate(chi, 3.0));
  CHECK(std::abs(z) < 1e-14);
}

TEST_CASE("transform unitarity on random functions") {
  auto rng = make_rng(21);
  for (int i = 0; i < 200; ++i) {
    const auto f = random_piecewise_fn(rng);
    const double n = norm(f);
    CHECK(norm(translate(f, 2.75)) == doctest::Approx(n).epsilon(1e-12));
    CHECK(norm(modulate(f, -1.3)) == doctest::Approx(n).epsilon(1e-12));
    CHECK(norm(dilate(f, 2.0)) == doctest::Approx(n).epsilon(1e-12));
    CHECK(norm(dilate(f, -0.5)) == doctest::Approx(n).epsilon(1e-12));
    CHECK(norm(conjugate_fn(f)) == doctest::Approx(n).epsilon(1e-12));
  }
  CHECK_THROWS_AS(dilate(PiecewiseExpFunction::indicator(0, 1), 0.0),
                  std::invalid_argument);
}

TEST_CASE("inner product structure") {
  auto rng = make_rng(22);
  for (int i = 0; i < 200; ++i) {
    const auto f = random_piecewise_fn(rng);
    const auto g = random_piecewise_fn(rng);
    const Complex fg = inner_product(f, g);
    const Complex gf = inner_product(g, f);
    CHECK(std::abs(fg - std::conj(gf)) < 1e-12);
    CHECK(norm_sq(f) >= 0.0);
    // antilinearity under conjugation
    CHECK(std::abs(inner_product(conjugate_fn(f), conjugate_fn(g)) -
                   std::conj(fg)) < 1e-12);
    // translation/modulation covariance of the pairing
    CHECK(std::abs(inner_product(translate(f, 0.7), translate(g, 0.7)) - fg) <
          1e-12);
  }
}

TEST_CASE("dilate maps indicator correctly") {
  const auto chi = PiecewiseExpFunction::indicator(0.0, 1.0);
  const auto d = dilate(chi, 2.0);  // 2^{-1/2} chi_[0,2)
  CHECK(d(1.5).real() == doctest::Approx(1.0 / std::sqrt(2.0)));
  CHECK(std::abs(d(2.5)) == 0.0);
  const auto dn = dilate(chi, -1.0);  // chi_[-1,0)
  CHECK(dn(-0.5).real() == doctest::Approx(1.0));
  CHECK(std::abs(dn(0.5)) == 0.0);
}

TEST_CASE("normal form combines and splits") {
  const PiecewiseExpFunction f({{0.0, 1.0, 0.5, 2.0}, {0.0, 1.0, 0.5, 2.0},
                                {0.5, 1.5, 1.0, -1.0}});
  const auto nf = f.normal_form();
  // breakpoints 0, 0.5, 1, 1.5 with two frequencies in the middle
  CHECK(nf.segment_count() == 4);
  auto rng = make_rng(23);
  for (int i = 0; i < 50; ++i) {
    const double t = std::uniform_real_distribution<double>(-0.5, 2.0)(rng);
    CHECK(std::abs(nf(t) - f(t)) < 1e-13);
  }
  // cancellation drops below tolerance
  const PiecewiseExpFunction g({{0.0, 1.0, 1.0, 0.0}, {0.0, 1.0, -1.0, 0.0}});
  CHECK(g.normal_form(1e-12).empty());
}

TEST_CASE("restrict and add") {
  const auto chi = PiecewiseExpFunction::indicator(0.0, 2.0);
  const auto r = restrict_to(chi, 0.5, 1.0);
  CHECK(norm_sq(r) == doctest::Approx(0.5));
  const auto s = add(chi, translate(chi, 1.0));
  CHECK(std::abs(s(1.5) - Complex(2.0)) < 1e-14);
}

TEST_CASE("sampled inner product converges to exact") {
  auto rng = make_rng(24);
  const auto f = random_piecewise_fn(rng);
  const auto g = random_piecewise_fn(rng);
  const Complex exact = inner_product(f, g);
  double prev = 1e9;
  for (double h : {1e-3, 5e-4, 2.5e-4}) {
    const double start = -3.0;
    const auto count = static_cast<std::size_t>(6.0 / h);
    const Complex approx =
        inner_product(sample(f, start, h, count), sample(g, start, h, count));
    const double err = std::abs(approx - exact);
    CHECK(err < prev * 0.75);  // roughly O(h)
    prev = err;
  }
  CHECK(prev < 1e-3);
}
