#include "hwave/spectral_set.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace hwave {

namespace {

std::vector<std::pair<double, double>> normalized(
    std::vector<std::pair<double, double>> ivs, bool reject_overlap) {
  for (auto& [lo, hi] : ivs) {
    if (!(lo < hi)) throw std::invalid_argument("IntervalUnion: requires lo < hi");
    if (!std::isfinite(lo) || !std::isfinite(hi))
      throw std::invalid_argument("IntervalUnion: non-finite endpoint");
  }
  std::sort(ivs.begin(), ivs.end());
  std::vector<std::pair<double, double>> out;
  for (const auto& iv : ivs) {
    if (!out.empty() && iv.first < out.back().second) {
      if (reject_overlap)
        throw std::invalid_argument("IntervalUnion: overlapping pieces");
      out.back().second = std::max(out.back().second, iv.second);
    } else if (!out.empty() && iv.first == out.back().second) {
      out.back().second = iv.second;  // merge touching
    } else {
      out.push_back(iv);
    }
  }
  return out;
}

}  // namespace

IntervalUnion::IntervalUnion(std::vector<std::pair<double, double>> intervals)
    : ivs_(normalized(std::move(intervals), /*reject_overlap=*/true)) {}

IntervalUnion IntervalUnion::shannon_band() {
  return IntervalUnion({{-1.0, -0.5}, {0.5, 1.0}});
}

IntervalUnion IntervalUnion::unit_interval() { return IntervalUnion({{0.0, 1.0}}); }

double IntervalUnion::measure() const {
  double m = 0.0;
  for (const auto& [lo, hi] : ivs_) m += hi - lo;
  return m;
}

double IntervalUnion::min_abs() const {
  double m = std::numeric_limits<double>::infinity();
  for (const auto& [lo, hi] : ivs_) {
    if (lo < 0.0 && hi > 0.0) return 0.0;
    m = std::min(m, std::min(std::abs(lo), std::abs(hi)));
  }
  return m;
}

bool IntervalUnion::straddles_zero() const {
  for (const auto& [lo, hi] : ivs_)
    if (lo < 0.0 && hi > 0.0) return true;
  return false;
}

double IntervalUnion::lower() const {
  if (ivs_.empty()) throw std::logic_error("lower(): empty set");
  return ivs_.front().first;
}

double IntervalUnion::upper() const {
  if (ivs_.empty()) throw std::logic_error("upper(): empty set");
  return ivs_.back().second;
}

IntervalUnion intersect(const IntervalUnion& a, const IntervalUnion& b) {
  std::vector<std::pair<double, double>> out;
  for (const auto& [alo, ahi] : a.intervals())
    for (const auto& [blo, bhi] : b.intervals()) {
      const double lo = std::max(alo, blo);
      const double hi = std::min(ahi, bhi);
      if (lo < hi) out.push_back({lo, hi});
    }
  return IntervalUnion(std::move(out));
}

IntervalUnion unite(const IntervalUnion& a, const IntervalUnion& b) {
  std::vector<std::pair<double, double>> ivs = a.intervals();
  ivs.insert(ivs.end(), b.intervals().begin(), b.intervals().end());
  std::sort(ivs.begin(), ivs.end());
  std::vector<std::pair<double, double>> out;
  for (const auto& iv : ivs) {
    if (!out.empty() && iv.first <= out.back().second)
      out.back().second = std::max(out.back().second, iv.second);
    else
      out.push_back(iv);
  }
  IntervalUnion r;
  if (!out.empty()) r = IntervalUnion(std::move(out));
  return r;
}

IntervalUnion shift(const IntervalUnion& s, long long k) {
  std::vector<std::pair<double, double>> out;
  for (const auto& [lo, hi] : s.intervals())
    out.push_back({lo + static_cast<double>(k), hi + static_cast<double>(k)});
  return IntervalUnion(std::move(out));
}

IntervalUnion dyadic_scale(const IntervalUnion& s, int j) {
  const double f = std::ldexp(1.0, j);
  std::vector<std::pair<double, double>> out;
  for (const auto& [lo, hi] : s.intervals()) out.push_back({f * lo, f * hi});
  return IntervalUnion(std::move(out));
}

double overlap_measure(const IntervalUnion& a, const IntervalUnion& b) {
  double m = 0.0;
  for (const auto& [alo, ahi] : a.intervals())
    for (const auto& [blo, bhi] : b.intervals()) {
      const double lo = std::max(alo, blo);
      const double hi = std::min(ahi, bhi);
      if (lo < hi) m += hi - lo;
    }
  return m;
}

CongruenceResult is_translation_congruent_unit(const IntervalUnion& s, double tol) {
  CongruenceResult res;
  if (std::abs(s.measure() - 1.0) > tol) return res;

  // Split each piece at integers and shift into [0,1); the set tiles the
  // line by Z iff the shifted pieces partition the unit interval.
  std::vector<std::pair<double, double>> shifted;
  for (const auto& [lo, hi] : s.intervals()) {
    double a = lo;
    while (a < hi - tol) {
      const double n = std::floor(a + tol);
      const double b = std::min(hi, n + 1.0);
      res.pieces.push_back({a, b, static_cast<long long>(-n)});
      shifted.push_back({a - n, b - n});
      a = b;
    }
  }
  double total = 0.0;
  for (const auto& [lo, hi] : shifted) total += hi - lo;
  std::sort(shifted.begin(), shifted.end());
  std::vector<std::pair<double, double>> merged;
  for (const auto& iv : shifted) {
    if (!merged.empty() && iv.first <= merged.back().second)
      merged.back().second = std::max(merged.back().second, iv.second);
    else
      merged.push_back(iv);
  }
  double union_measure = 0.0;
  for (const auto& [lo, hi] : merged) union_measure += hi - lo;

  // total == 1 with no double cover (union == total) means partition of (0,1].
  res.congruent =
      std::abs(total - 1.0) <= tol && total - union_measure <= tol;
  if (!res.congruent) res.pieces.clear();
  return res;
}

CongruenceResult is_dilation_congruent_shannon(const IntervalUnion& s, double tol) {
  if (s.straddles_zero() || (!s.empty() && s.min_abs() <= 0.0))
    throw std::invalid_argument(
        "dilation congruence: set must be bounded away from 0");
  CongruenceResult res;
  if (s.empty()) return res;

  // Split each piece at powers of 2 so every subpiece lies inside one dyadic
  // band (2^k, 2^{k+1}] of |lambda|, then scale it onto the Shannon band.
  // Negative pieces are reflected, split, and reflected back.
  struct Sub {
    double lo, hi;  // positive magnitudes, lo < hi
    int k;          // subpiece of (2^k, 2^{k+1}]
  };
  auto split_positive = [tol](double a, double b) {
    std::vector<Sub> out;
    while (a < b - tol) {
      // exact powers of 2 belong to the band they close, so nudge up
      const int k = static_cast<int>(std::floor(std::log2(a * (1.0 + 1e-12))));
      const double cut = std::ldexp(1.0, k + 1);
      const double hi = std::min(b, cut);
      out.push_back({a, hi, k});
      a = hi;
    }
    return out;
  };

  std::vector<std::pair<double, double>> images_pos, images_neg;
  for (const auto& [lo, hi] : s.intervals()) {
    const bool negative = hi <= 0.0;
    const double plo = negative ? -hi : lo;
    const double phi = negative ? -lo : hi;
    for (const Sub& sub : split_positive(plo, phi)) {
      const int j = -(sub.k + 1);  // 2^j maps (2^k, 2^{k+1}] onto (1/2, 1]
      const double f = std::ldexp(1.0, j);
      if (negative) {
        res.pieces.push_back({-sub.hi, -sub.lo, j});
        images_neg.push_back({-f * sub.hi, -f * sub.lo});
      } else {
        res.pieces.push_back({sub.lo, sub.hi, j});
        images_pos.push_back({f * sub.lo, f * sub.hi});
      }
    }
  }

  auto check_half = [tol](std::vector<std::pair<double, double>> imgs, double lo,
                          double hi) {
    double total = 0.0;
    for (const auto& [a, b] : imgs) {
      total += b - a;
      if (a < lo - tol || b > hi + tol) return false;  // escapes the band
    }
    std::sort(imgs.begin(), imgs.end());
    std::vector<std::pair<double, double>> merged;
    for (const auto& iv : imgs) {
      if (!merged.empty() && iv.first <= merged.back().second)
        merged.back().second = std::max(merged.back().second, iv.second);
      else
        merged.push_back(iv);
    }
    double um = 0.0;
    for (const auto& [a, b] : merged) um += b - a;
    return std::abs(total - 0.5) <= tol && total - um <= tol;
  };

  res.congruent = check_half(images_pos, 0.5, 1.0) &&
                  check_half(images_neg, -1.0, -0.5);
  if (!res.congruent) res.pieces.clear();
  return res;
}

IntervalUnion parse_interval_union(std::string_view text) {
  std::vector<std::pair<double, double>> ivs;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  while (true) {
    skip_ws();
    if (i >= text.size() || (text[i] != '[' && text[i] != '('))
      throw std::invalid_argument("interval set: expected '[' or '('");
    ++i;
    auto parse_num = [&]() -> double {
      skip_ws();
      std::size_t j = i;
      while (j < text.size() && text[j] != ',' && text[j] != ')' && text[j] != ']')
        ++j;
      const std::string tok(text.substr(i, j - i));
      std::size_t used = 0;
      double v;
      try {
        v = std::stod(tok, &used);
      } catch (const std::exception&) {
        throw std::invalid_argument("interval set: bad number '" + tok + "'");
      }
      while (used < tok.size() &&
             std::isspace(static_cast<unsigned char>(tok[used])))
        ++used;
      if (used != tok.size())
        throw std::invalid_argument("interval set: bad number '" + tok + "'");
      i = j;
      return v;
    };
    const double lo = parse_num();
    skip_ws();
    if (i >= text.size() || text[i] != ',')
      throw std::invalid_argument("interval set: expected ','");
    ++i;
    const double hi = parse_num();
    skip_ws();
    if (i >= text.size() || (text[i] != ')' && text[i] != ']'))
      throw std::invalid_argument("interval set: expected ')' or ']'");
    ++i;
    ivs.push_back({lo, hi});
    skip_ws();
    if (i >= text.size()) break;
    if (text[i] != 'u' && text[i] != 'U')
      throw std::invalid_argument("interval set: expected 'u' between pieces");
    ++i;
  }
  return IntervalUnion(std::move(ivs));
}

std::string format(const IntervalUnion& s) {
  std::ostringstream os;
  os.precision(17);
  bool first = true;
  for (const auto& [lo, hi] : s.intervals()) {
    if (!first) os << "u";
    first = false;
    os << "[" << lo << "," << hi << ")";
  }
  if (first) os << "[empty]";
  return os.str();
}

}  // namespace hwave
