#include <gtest/gtest.h>

#include <array>
#include <random>

#include "ddvv/scalar.hpp"

namespace {

using ddvv::Complex;
using ddvv::Quaternion;

// Quaternion w + xi + yj + zk as the complex 2x2 matrix [[a, b], [-conj b, conj a]]
// with a = w + xi, b = y + zi. Products in this model are ordinary matrix products.
using C2 = std::array<Complex, 4>;

C2 to_c2(const Quaternion& q) {
  const Complex a{q.w, q.x}, b{q.y, q.z};
  return {a, b, -std::conj(b), std::conj(a)};
}

Quaternion from_c2(const C2& m) { return {m[0].real(), m[0].imag(), m[1].real(), m[1].imag()}; }

C2 mul(const C2& p, const C2& q) {
  return {p[0] * q[0] + p[1] * q[2], p[0] * q[1] + p[1] * q[3], p[2] * q[0] + p[3] * q[2], p[2] * q[1] + p[3] * q[3]};
}

Quaternion random_q(std::mt19937_64& rng) {
  std::normal_distribution<double> nd;
  return {nd(rng), nd(rng), nd(rng), nd(rng)};
}

void expect_q(const Quaternion& got, const Quaternion& want, double tol = 0.0) {
  EXPECT_NEAR(got.w, want.w, tol);
  EXPECT_NEAR(got.x, want.x, tol);
  EXPECT_NEAR(got.y, want.y, tol);
  EXPECT_NEAR(got.z, want.z, tol);
}

TEST(Quaternion, BasisRelations) {
  const auto i = Quaternion::i(), j = Quaternion::j(), k = Quaternion::k();
  expect_q(i * j, k);
  expect_q(j * i, -k);
  expect_q(j * k, i);
  expect_q(k * i, j);
  for (const auto& u : {i, j, k}) expect_q(u * u, Quaternion{-1.0});
  expect_q(i * j * k, Quaternion{-1.0});
}

TEST(Quaternion, ExpandedProduct) {
  const Quaternion a{1, 1, 0, 0}, b{1, 0, 1, 0};
  expect_q(a * b, Quaternion{1, 1, 1, 1});
  expect_q(ddvv::qconj(a * b), Quaternion{1, -1, -1, -1});
  expect_q(ddvv::qconj(a * b), ddvv::qconj(b) * ddvv::qconj(a));
}

TEST(Quaternion, ConjugationAndRealPart) {
  expect_q(ddvv::qconj(Quaternion::i()), -Quaternion::i());
  expect_q(ddvv::qconj(Quaternion{3.0}), Quaternion{3.0});
  EXPECT_EQ(ddvv::q_re(Quaternion::k()), 0.0);
  EXPECT_EQ(ddvv::q_re(Quaternion{2, 1, 0, 0}), 2.0);
}

TEST(Quaternion, ProductMatchesComplexModel) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 500; ++t) {
    const Quaternion p = random_q(rng), q = random_q(rng);
    expect_q(p * q, from_c2(mul(to_c2(p), to_c2(q))), 1e-12);
  }
}

TEST(Quaternion, AlgebraicIdentities) {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 500; ++t) {
    const Quaternion p = random_q(rng), q = random_q(rng), r = random_q(rng);
    expect_q((p * q) * r, p * (q * r), 1e-12);
    expect_q(ddvv::qconj(p * q), ddvv::qconj(q) * ddvv::qconj(p), 1e-12);
    expect_q(ddvv::qconj(ddvv::qconj(p)), p);
    const double lhs = ddvv::q_norm2(p * q);
    const double rhs = ddvv::q_norm2(p) * ddvv::q_norm2(q);
    EXPECT_NEAR(lhs, rhs, 1e-12 * rhs);
    EXPECT_NEAR(ddvv::q_re(p * q), ddvv::q_re(q * p), 1e-12);
    expect_q(p * ddvv::qconj(p), Quaternion{ddvv::q_norm2(p)}, 1e-12);
  }
}

TEST(Quaternion, OrthogonalImaginaryUnitsAnticommute) {
  std::mt19937_64 rng(13);
  std::normal_distribution<double> nd;
  for (int t = 0; t < 200; ++t) {
    std::array<double, 3> a{nd(rng), nd(rng), nd(rng)}, b{nd(rng), nd(rng), nd(rng)};
    const double na = std::sqrt(a[0] * a[0] + a[1] * a[1] + a[2] * a[2]);
    for (double& v : a) v /= na;
    const double proj = a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
    for (int c = 0; c < 3; ++c) b[c] -= proj * a[c];
    const double nb = std::sqrt(b[0] * b[0] + b[1] * b[1] + b[2] * b[2]);
    for (double& v : b) v /= nb;
    const Quaternion p{0, a[0], a[1], a[2]}, q{0, b[0], b[1], b[2]};
    EXPECT_NEAR(ddvv::q_re(p * ddvv::qconj(q)), 0.0, 1e-12);
    expect_q(p * q, -(q * p), 1e-12);
  }
}

TEST(ScalarTraits, Uniform) {
  EXPECT_EQ(ddvv::norm2(3.0), 9.0);
  EXPECT_EQ(ddvv::norm2(Complex{3, 4}), 25.0);
  EXPECT_EQ(ddvv::norm2(Quaternion{1, 2, 3, 4}), 30.0);
  EXPECT_EQ(ddvv::re(Complex{2, 5}), 2.0);
  EXPECT_EQ(ddvv::conj(Complex{2, 5}), Complex(2, -5));
  EXPECT_EQ(ddvv::kind_of<double>, ddvv::ScalarKind::real);
  EXPECT_EQ(ddvv::kind_of<Complex>, ddvv::ScalarKind::complex);
  EXPECT_EQ(ddvv::kind_of<Quaternion>, ddvv::ScalarKind::quaternion);
  EXPECT_EQ(ddvv::to_string(ddvv::ScalarKind::quaternion), "quaternion");

  Quaternion q;
  for (int c = 0; c < 4; ++c) ddvv::scalar_traits<Quaternion>::set_component(q, c, c + 1.0);
  for (int c = 0; c < 4; ++c) EXPECT_EQ(ddvv::scalar_traits<Quaternion>::component(q, c), c + 1.0);
}

}  // namespace
