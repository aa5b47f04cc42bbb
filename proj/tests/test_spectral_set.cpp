#include <doctest.h>

#include <stdexcept>

#include "hwave/spectral_set.hpp"

using namespace hwave;

TEST_CASE("interval union normalization") {
  const IntervalUnion s({{0.5, 1.0}, {-1.0, -0.5}});
  CHECK(s.intervals().size() == 2);
  CHECK(s.intervals()[0].first == -1.0);
  CHECK(s.measure() == doctest::Approx(1.0));
  CHECK(s.min_abs() == doctest::Approx(0.5));
  CHECK_FALSE(s.straddles_zero());
  CHECK_THROWS_AS(IntervalUnion({{0.0, 1.0}, {0.5, 2.0}}), std::invalid_argument);
  CHECK_THROWS_AS(IntervalUnion({{1.0, 1.0}}), std::invalid_argument);
  // touching pieces merge
  CHECK(IntervalUnion({{0.0, 0.5}, {0.5, 1.0}}).intervals().size() == 1);
}

TEST_CASE("set algebra") {
  const auto s = IntervalUnion::shannon_band();
  const auto u = IntervalUnion::unit_interval();
  CHECK(overlap_measure(s, u) == doctest::Approx(0.5));
  CHECK(intersect(s, u).measure() == doctest::Approx(0.5));
  CHECK(unite(s, u).measure() == doctest::Approx(1.5));
  CHECK(shift(u, 2).lower() == doctest::Approx(2.0));
  CHECK(dyadic_scale(s, -1).upper() == doctest::Approx(0.5));
  CHECK(dyadic_scale(s, -1).measure() == doctest::Approx(0.5));
}

TEST_CASE("translation congruence") {
  const auto r1 = is_translation_congruent_unit(IntervalUnion::shannon_band());
  CHECK(r1.congruent);
  // [-1,-1/2) shifts by +1 onto [0,1/2); (1/2,1] stays
  long long w_neg = 0, w_pos = 0;
  for (const auto& p : r1.pieces) (p.lo < 0 ? w_neg : w_pos) = p.witness;
  CHECK(w_neg == 1);
  CHECK(w_pos == 0);

  CHECK(is_translation_congruent_unit(IntervalUnion::unit_interval()).congruent);
  CHECK(is_translation_congruent_unit(IntervalUnion({{0.25, 1.25}})).congruent);
  CHECK_FALSE(is_translation_congruent_unit(IntervalUnion({{0.0, 0.5}})).congruent);
  // right measure but double cover: both halves land on [0,1/2)
  CHECK_FALSE(
      is_translation_congruent_unit(IntervalUnion({{0.0, 0.5}, {1.0, 1.5}}))
          .congruent);
  // split across an integer still works
  CHECK(is_translation_congruent_unit(IntervalUnion({{-0.5, 0.5}})).congruent);
}

TEST_CASE("dilation congruence") {
  CHECK(is_dilation_congruent_shannon(IntervalUnion::shannon_band()).congruent);
  const auto r = is_dilation_congruent_shannon(IntervalUnion({{-2.0, -1.0}, {0.25, 0.5}}));
  CHECK(r.congruent);
  long long j_neg = 0, j_pos = 0;
  for (const auto& p : r.pieces) (p.lo < 0 ? j_neg : j_pos) = p.witness;
  CHECK(j_neg == -1);
  CHECK(j_pos == 1);
  CHECK_FALSE(is_dilation_congruent_shannon(IntervalUnion({{0.5, 1.0}})).congruent);
  CHECK_THROWS_AS(is_dilation_congruent_shannon(IntervalUnion::unit_interval()),
                  std::invalid_argument);
  // invariance under re-slicing
  CHECK(is_dilation_congruent_shannon(
            IntervalUnion({{-1.0, -0.75}, {-0.75, -0.5}, {0.5, 1.0}}))
            .congruent);
}

TEST_CASE("parsing and formatting") {
  const auto s = parse_interval_union("[-1,-0.5)u(0.5,1]");
  CHECK(s.intervals().size() == 2);
  CHECK(s.lower() == -1.0);
  CHECK(s.upper() == 1.0);
  CHECK_THROWS_AS(parse_interval_union("junk"), std::invalid_argument);
  CHECK_THROWS_AS(parse_interval_union("[0,1x]"), std::invalid_argument);
  CHECK_THROWS_AS(parse_interval_union("[1,0]"), std::invalid_argument);
  const auto round = parse_interval_union(format(s));
  CHECK(round.intervals() == s.intervals());
}
