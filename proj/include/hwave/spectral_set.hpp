#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hwave {

/// Finite disjoint union of half-open intervals.  Endpoint orientation is a
/// null set and never affects a measure; touching pieces are merged on
/// construction, overlapping pieces are rejected.
class IntervalUnion {
 public:
  IntervalUnion() = default;
  explicit IntervalUnion(std::vector<std::pair<double, double>> intervals);

  /// [-1,-1/2) u (1/2,1]
  static IntervalUnion shannon_band();
  static IntervalUnion unit_interval();  // (0,1]

  const std::vector<std::pair<double, double>>& intervals() const { return ivs_; }
  bool empty() const { return ivs_.empty(); }
  double measure() const;

  /// Smallest |endpoint| over all pieces; 0 if some piece contains or
  /// touches 0, +inf for the empty set.
  double min_abs() const;
  bool straddles_zero() const;

  double lower() const;
  double upper() const;

 private:
  std::vector<std::pair<double, double>> ivs_;  // sorted, disjoint
};

IntervalUnion intersect(const IntervalUnion& a, const IntervalUnion& b);
IntervalUnion unite(const IntervalUnion& a, const IntervalUnion& b);
IntervalUnion shift(const IntervalUnion& s, long long k);
/// Endpoints multiplied by 2^j.
IntervalUnion dyadic_scale(const IntervalUnion& s, int j);

double overlap_measure(const IntervalUnion& a, const IntervalUnion& b);

struct CongruencePiece {
  double lo;
  double hi;
  long long witness;  // shift k (translation) or exponent j (dilation)
};

struct CongruenceResult {
  bool congruent = false;
  std::vector<CongruencePiece> pieces;
};

/// True iff the integer-shift images of S partition (0,1] up to measure tol.
/// The witness records the per-piece shift k with lambda + k in (0,1].
CongruenceResult is_translation_congruent_unit(const IntervalUnion& s,
                                               double tol = 1e-9);

/// True iff the dyadic-scale images of S partition [-1,-1/2) u (1/2,1] up to
/// measure tol.  The witness records the per-piece exponent j with
/// 2^j lambda in the band.  Pieces touching 0 are rejected.
CongruenceResult is_dilation_congruent_shannon(const IntervalUnion& s,
                                               double tol = 1e-9);

/// Parses e.g. "[-1,-0.5)u(0.5,1]".  Bracket style is accepted on either
/// side; overlapping pieces are rejected.
IntervalUnion parse_interval_union(std::string_view text);
std::string format(const IntervalUnion& s);

}  // namespace hwave
