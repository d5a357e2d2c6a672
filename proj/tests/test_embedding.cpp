#include <gtest/gtest.h>

#include "ddvv/embedding.hpp"
#include "ddvv/random.hpp"

namespace {

using namespace ddvv;

const Complex I{0.0, 1.0};

TEST(Phi, Literals) {
  EXPECT_EQ(frob_norm(phi_embed(ComplexMatrix{{1.0}}) - RealMatrix{{0, 1}, {-1, 0}}), 0.0);
  EXPECT_EQ(frob_norm(phi_embed(ComplexMatrix{{I}}) - RealMatrix{{1, 0}, {0, 1}}), 0.0);
  // a + ib -> [[b, a], [-a, b]]
  EXPECT_EQ(frob_norm(phi_embed(ComplexMatrix{{Complex{2, 3}}}) - RealMatrix{{3, 2}, {-2, 3}}), 0.0);
  EXPECT_EQ(frob_norm(phi_embed(ComplexMatrix(3, 3))), 0.0);
  EXPECT_EQ(phi_embed(ComplexMatrix(3, 3)).rows(), 6u);
}

TEST(Phi, BlockLayout) {
  Rng rng(31);
  const auto x = gaussian_matrix<Complex>(rng, 3, 3);
  const auto p = phi_embed(x);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      EXPECT_EQ(p(i, j), x(i, j).imag());
      EXPECT_EQ(p(i, j + 3), x(i, j).real());
      EXPECT_EQ(p(i + 3, j), -x(i, j).real());
      EXPECT_EQ(p(i + 3, j + 3), x(i, j).imag());
    }
}

TEST(Phi, Identities) {
  Rng rng(32);
  for (int t = 0; t < 200; ++t) {
    const auto x = gaussian_matrix<Complex>(rng, 3, 3);
    const auto y = gaussian_matrix<Complex>(rng, 3, 3);
    const double nx = frob_norm2(x);
    EXPECT_NEAR(frob_norm2(phi_embed(x)), 2.0 * nx, 1e-10 * (1 + nx));
    EXPECT_NEAR(frob_norm(phi_embed(scale_left(-I, x))), frob_norm(phi_embed(x)), 1e-10 * (1 + nx));
    EXPECT_LT(phi_commutator_identity_residual(x, y), 1e-10 * (1 + frob_norm(x) * frob_norm(y)));
    // real linearity
    EXPECT_LT(frob_norm(phi_embed(x + 2.5 * y) - (phi_embed(x) + 2.5 * phi_embed(y))), 1e-12);
  }
  EXPECT_EQ(phi_commutator_identity_residual(ComplexMatrix{{1.0}}, ComplexMatrix{{I}}), 0.0);
}

TEST(Phi, HermitianIffSkewImage) {
  Rng rng(33);
  for (int t = 0; t < 50; ++t) {
    const auto h = random_structured<Complex>(rng, 3, Structure::hermitian);
    EXPECT_TRUE(classify(phi_embed(h), Structure::skew).holds);
    const auto s = random_structured<Complex>(rng, 3, Structure::skew_hermitian);
    EXPECT_TRUE(classify(phi_embed(s), Structure::symmetric).holds);
    const auto g = gaussian_matrix<Complex>(rng, 3, 3);
    EXPECT_FALSE(classify(g, Structure::hermitian).holds);
    EXPECT_FALSE(classify(phi_embed(g), Structure::skew).holds);
  }
}

TEST(Psi, Literals) {
  const ComplexMatrix want_j{{0.0, 1.0}, {-1.0, 0.0}};
  EXPECT_EQ(frob_norm(psi_embed(QuaternionMatrix{{Quaternion::j()}}) - want_j), 0.0);
  const ComplexMatrix want_k{{0.0, I}, {I, 0.0}};
  EXPECT_EQ(frob_norm(psi_embed(QuaternionMatrix{{Quaternion::k()}}) - want_k), 0.0);
  const ComplexMatrix want_i{{I, 0.0}, {0.0, -I}};
  EXPECT_EQ(frob_norm(psi_embed(QuaternionMatrix{{Quaternion::i()}}) - want_i), 0.0);
  EXPECT_EQ(psi_commutator_identity_residual(QuaternionMatrix{{Quaternion::i()}}, QuaternionMatrix{{Quaternion::i()}}), 0.0);
  EXPECT_EQ(psi_commutator_identity_residual(QuaternionMatrix{{Quaternion::i()}}, QuaternionMatrix{{Quaternion::j()}}), 0.0);
  const QuaternionMatrix two_k{{Quaternion{0, 0, 0, 2}}};
  EXPECT_EQ(frob_norm(commutator(psi_embed(QuaternionMatrix{{Quaternion::i()}}), psi_embed(QuaternionMatrix{{Quaternion::j()}})) -
                      psi_embed(two_k)),
            0.0);
}

TEST(Psi, SplitJoinRoundTrip) {
  Rng rng(34);
  const auto x = gaussian_matrix<Quaternion>(rng, 3, 3);
  auto [x1, x2] = quaternion_split(x);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      EXPECT_EQ(x1(i, j), Complex(x(i, j).w, x(i, j).x));
      EXPECT_EQ(x2(i, j), Complex(x(i, j).y, x(i, j).z));
    }
  const auto back = quaternion_join(x1, x2);
  EXPECT_EQ(frob_norm(back - x), 0.0);
}

TEST(Psi, HomomorphismIdentities) {
  Rng rng(35);
  for (int t = 0; t < 200; ++t) {
    const auto x = gaussian_matrix<Quaternion>(rng, 2, 2);
    const auto y = gaussian_matrix<Quaternion>(rng, 2, 2);
    const double scale = 1 + frob_norm(x) * frob_norm(y);
    EXPECT_NEAR(frob_norm2(psi_embed(x)), 2.0 * frob_norm2(x), 1e-10 * (1 + frob_norm2(x)));
    EXPECT_LT(psi_commutator_identity_residual(x, y), 1e-10 * scale);
    EXPECT_LT(frob_norm(psi_embed(matmul(x, y)) - matmul(psi_embed(x), psi_embed(y))), 1e-10 * scale);
    EXPECT_LT(frob_norm(psi_embed(adjoint(x)) - adjoint(psi_embed(x))), 1e-12);
  }
}

TEST(Embeddings, RejectNonSquare) {
  EXPECT_THROW(phi_embed(ComplexMatrix(2, 3)), DimensionError);
  EXPECT_THROW(psi_embed(QuaternionMatrix(2, 3)), DimensionError);
}

}  // namespace
