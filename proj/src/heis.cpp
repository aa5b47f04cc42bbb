#include "hwave/heis.hpp"

#include <cmath>

namespace hwave {

DilationAutomorphism::DilationAutomorphism(double a, double b, int m)
    : a_(a), b_(b), m_(m) {
  if (a == 0.0 || b == 0.0) throw std::invalid_argument("dilation: a, b must be nonzero");
  if (std::abs(a * b - 2.0) > 1e-12)
    throw std::invalid_argument("dilation: a*b = 2 required");
}

Mat4 DilationAutomorphism::matrix() const {
  Mat4 m = Mat4::identity();
  m(0, 0) = std::pow(a_ * b_, m_);
  m(1, 1) = std::pow(b_, m_);
  m(2, 2) = std::pow(a_, m_);
  return m;
}

GroupElement multiply(const GroupElement& g, const GroupElement& h) {
  // (x,y,z)*(w,v,u) = (w+x, v+y, u+z+vx)
  return {h.x + g.x, h.y + g.y, h.z + g.z + h.y * g.x};
}

GroupElement inverse(const GroupElement& g) {
  return {-g.x, -g.y, g.x * g.y - g.z};
}

Mat4 to_matrix(const GroupElement& g) {
  Mat4 m = Mat4::identity();
  m(0, 1) = g.x;
  m(0, 2) = -g.y;
  m(0, 3) = g.z;
  m(1, 3) = g.y;
  return m;
}

GroupElement from_matrix(const Mat4& m) {
  return {m(0, 1), m(1, 3), m(0, 3)};
}

GroupElement conjugate(const DilationAutomorphism& d, const GroupElement& g) {
  const int m = d.m();
  return {std::pow(d.a(), m) * g.x, std::pow(d.b(), m) * g.y,
          std::pow(d.a() * d.b(), m) * g.z};
}

GroupElement group_element(const LatticePoint& p) {
  return {static_cast<double>(p.k3), static_cast<double>(p.k2),
          static_cast<double>(p.k1)};
}

std::vector<LambdaPair> enumerate_lambda(const LambdaBounds& b) {
  if (b.k1 < 0 || b.k2 < 0 || b.k3 < 0 || b.m2 < 0 || b.m3 < 0)
    throw std::invalid_argument("enumerate_lambda: bounds must be >= 0");
  std::vector<LambdaPair> out;
  const std::size_t n = static_cast<std::size_t>(2 * b.k1 + 1) * (2 * b.k2 + 1) *
                        (2 * b.k3 + 1) * (2 * b.m2 + 1) * (2 * b.m3 + 1);
  out.reserve(n);
  for (int k1 = -b.k1; k1 <= b.k1; ++k1)
    for (int k2 = -b.k2; k2 <= b.k2; ++k2)
      for (int k3 = -b.k3; k3 <= b.k3; ++k3)
        for (int m2 = -b.m2; m2 <= b.m2; ++m2)
          for (int m3 = -b.m3; m3 <= b.m3; ++m3)
            out.push_back({{k1, k2, k3}, {0, m2, m3}});
  return out;
}

}  // namespace hwave
