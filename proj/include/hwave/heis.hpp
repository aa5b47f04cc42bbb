#pragma once

#include <array>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace hwave {

/// A point (x,y,z) of the Heisenberg group in exponential coordinates,
/// M(x,y,z) = exp(zZ) exp(yY) exp(xX).
struct GroupElement {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
};

/// 4x4 real matrix, row-major.  Used for the faithful embedding of the
/// group and as an oracle in the test suites.
struct Mat4 {
  std::array<double, 16> a{};

  double& operator()(int r, int c) { return a[4 * r + c]; }
  double operator()(int r, int c) const { return a[4 * r + c]; }

  static Mat4 identity() {
    Mat4 m;
    for (int i = 0; i < 4; ++i) m(i, i) = 1.0;
    return m;
  }
};

inline Mat4 operator*(const Mat4& l, const Mat4& r) {
  Mat4 out;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      double s = 0.0;
      for (int k = 0; k < 4; ++k) s += l(i, k) * r(k, j);
      out(i, j) = s;
    }
  return out;
}

/// Element of the integer lattice: matrix entries (1, k3, -k2, k1 / 1, 0, k2 / 1, 0 / 1).
/// In exponential coordinates this is the point (x,y,z) = (k3, k2, k1).
struct LatticePoint {
  long long k1 = 0;
  long long k2 = 0;
  long long k3 = 0;
};

/// Element of the translation lattice on both factors: left is a general
/// lattice point, right always has k1 = 0 (its entries are (m2, m3)).
struct LambdaPair {
  LatticePoint left;
  LatticePoint right;  // right.k1 == 0 always
};

/// Diagonal automorphism family A_(a,b)^m with the constraint a*b = 2.
/// Conjugation acts on coordinates by (x,y,z) -> (a^m x, b^m y, (ab)^m z).
class DilationAutomorphism {
 public:
  DilationAutomorphism(double a, double b, int m);

  double a() const { return a_; }
  double b() const { return b_; }
  int m() const { return m_; }

  /// |det A|^m with |det A| = (ab)^2 = 4.
  double jacobian() const { return std::pow(4.0, m_); }

  DilationAutomorphism inverse() const { return {a_, b_, -m_}; }
  DilationAutomorphism power(int k) const { return {a_, b_, m_ * k}; }

  Mat4 matrix() const;

 private:
  double a_;
  double b_;
  int m_;
};

GroupElement multiply(const GroupElement& g, const GroupElement& h);
GroupElement inverse(const GroupElement& g);
Mat4 to_matrix(const GroupElement& g);
GroupElement from_matrix(const Mat4& m);
GroupElement conjugate(const DilationAutomorphism& d, const GroupElement& g);

GroupElement group_element(const LatticePoint& p);

struct LambdaBounds {
  int k1 = 0;
  int k2 = 0;
  int k3 = 0;
  int m2 = 0;
  int m3 = 0;
};

/// All elements of the truncated lattice with |k1|<=bounds.k1 etc., in
/// lexicographic order (k1,k2,k3,m2,m3).
std::vector<LambdaPair> enumerate_lambda(const LambdaBounds& bounds);

}  // namespace hwave
