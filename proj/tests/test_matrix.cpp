#include <gtest/gtest.h>

#include <atomic>
#include <set>

#include "ddvv/parallel.hpp"
#include "ddvv/random.hpp"

namespace {

using namespace ddvv;

template <Scalar S>
Matrix<S> naive_product(const Matrix<S>& a, const Matrix<S>& b) {
  Matrix<S> c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      S acc{};
      for (std::size_t k = 0; k < a.cols(); ++k) acc += a(i, k) * b(k, j);
      c(i, j) = acc;
    }
  return c;
}

template <Scalar S>
double naive_inner(const Matrix<S>& a, const Matrix<S>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) s += re(a(i, j) * conj(b(i, j)));
  return s;
}

template <class T>
class AllKinds : public ::testing::Test {};
using Kinds = ::testing::Types<double, Complex, Quaternion>;
TYPED_TEST_SUITE(AllKinds, Kinds);

TYPED_TEST(AllKinds, ProductMatchesTripleLoop) {
  using S = TypeParam;
  Rng rng(21);
  for (int t = 0; t < 50; ++t) {
    const auto a = gaussian_matrix<S>(rng, 3, 4);
    const auto b = gaussian_matrix<S>(rng, 4, 2);
    EXPECT_LT(frob_norm(matmul(a, b) - naive_product(a, b)), 1e-12);
  }
  const auto a = gaussian_matrix<S>(rng, 3, 3);
  EXPECT_EQ(frob_norm(matmul(Matrix<S>::identity(3), a) - a), 0.0);
  EXPECT_THROW(matmul(a, gaussian_matrix<S>(rng, 2, 2)), DimensionError);
}

TYPED_TEST(AllKinds, InnerProductMatchesEntrywiseSum) {
  using S = TypeParam;
  Rng rng(22);
  for (int t = 0; t < 50; ++t) {
    const auto a = gaussian_matrix<S>(rng, 3, 3);
    const auto b = gaussian_matrix<S>(rng, 3, 3);
    EXPECT_NEAR(frob_inner(a, b), naive_inner(a, b), 1e-12);
    EXPECT_NEAR(frob_inner(a, b), frob_inner(b, a), 1e-12);
    EXPECT_NEAR(frob_inner(a, b), re_trace(matmul(a, adjoint(b))), 1e-12);
    EXPECT_NEAR(frob_norm2(a), frob_inner(a, a), 1e-12);
    EXPECT_GT(frob_norm2(a), 0.0);
  }
  EXPECT_EQ(frob_inner(Matrix<S>::identity(2), Matrix<S>::identity(2)), 2.0);
  EXPECT_THROW(frob_inner(Matrix<S>(2, 2), Matrix<S>(2, 3)), DimensionError);
}

TYPED_TEST(AllKinds, AdjointAndCommutatorIdentities) {
  using S = TypeParam;
  Rng rng(23);
  for (int t = 0; t < 30; ++t) {
    const auto x = gaussian_matrix<S>(rng, 3, 3);
    const auto y = gaussian_matrix<S>(rng, 3, 3);
    const auto z = gaussian_matrix<S>(rng, 3, 3);
    EXPECT_EQ(frob_norm(adjoint(adjoint(x)) - x), 0.0);
    EXPECT_LT(frob_norm(adjoint(matmul(x, y)) - matmul(adjoint(y), adjoint(x))), 1e-12);
    EXPECT_LT(frob_norm(commutator(x, y) + commutator(y, x)), 1e-12);
    EXPECT_EQ(frob_norm(commutator(x, x)), 0.0);
    const auto jac = commutator(x, commutator(y, z)) + commutator(y, commutator(z, x)) + commutator(z, commutator(x, y));
    EXPECT_LT(frob_norm(jac), 1e-11);
    // Re tr is cyclic even over H.
    EXPECT_NEAR(re_trace(matmul(x, y)), re_trace(matmul(y, x)), 1e-12);
  }
}

TYPED_TEST(AllKinds, SubMultiplicativityAndCauchySchwarz) {
  using S = TypeParam;
  Rng rng(24);
  for (int t = 0; t < 200; ++t) {
    const auto x = gaussian_matrix<S>(rng, 3, 3);
    const auto y = gaussian_matrix<S>(rng, 3, 3);
    EXPECT_LE(frob_norm(matmul(x, y)), frob_norm(x) * frob_norm(y) * (1 + 1e-12));
    EXPECT_LE(std::abs(frob_inner(x, y)), frob_norm(x) * frob_norm(y) * (1 + 1e-12));
    const auto a = gaussian_matrix<S>(rng, 4, 1);
    const auto b = gaussian_matrix<S>(rng, 4, 1);
    EXPECT_LE(frob_norm(matmul(adjoint(b), a)), frob_norm(a) * frob_norm(b) * (1 + 1e-12));
  }
}

TYPED_TEST(AllKinds, EqualityCasesOfSubMultiplicativityAndCauchySchwarz) {
  using S = TypeParam;
  Rng rng(25);
  for (int t = 0; t < 50; ++t) {
    // X = a u*, Y = u b*
    const auto a = gaussian_matrix<S>(rng, 3, 1);
    const auto b = gaussian_matrix<S>(rng, 3, 1);
    const auto u = gaussian_matrix<S>(rng, 3, 1);
    const auto x = matmul(a, adjoint(u));
    const auto y = matmul(u, adjoint(b));
    EXPECT_NEAR(frob_norm(matmul(x, y)), frob_norm(x) * frob_norm(y), 1e-10 * frob_norm(x) * frob_norm(y));
    // b = a sigma
    const S sigma = gaussian<S>(rng);
    Matrix<S> bs = a;
    for (auto& e : bs.entries()) e = e * sigma;
    EXPECT_NEAR(frob_norm(matmul(adjoint(bs), a)), frob_norm(a) * frob_norm(bs), 1e-10 * frob_norm(a) * frob_norm(bs));
  }
}

TEST(Matrix, QuaternionScalarCases) {
  const QuaternionMatrix i{{Quaternion::i()}}, j{{Quaternion::j()}};
  const auto p = matmul(i, j);
  EXPECT_EQ(p(0, 0).z, 1.0);
  const auto c = commutator(i, j);
  EXPECT_EQ(c(0, 0).z, 2.0);
  EXPECT_EQ(c(0, 0).w, 0.0);
  EXPECT_EQ(adjoint(i)(0, 0).x, -1.0);
  // Full traces of quaternionic products need not agree.
  EXPECT_NE(matmul(i, j)(0, 0).z, matmul(j, i)(0, 0).z);
}

TEST(Matrix, PauliCommutator) {
  const RealMatrix b1{{1, 0}, {0, -1}}, b2{{0, 1}, {1, 0}};
  const RealMatrix want{{0, 2}, {-2, 0}};
  EXPECT_EQ(frob_norm(commutator(b1, b2) - want), 0.0);
  EXPECT_EQ(frob_inner(b1, b2), 0.0);
}

TEST(Matrix, Classify) {
  const RealMatrix d{{1, 0}, {0, -1}};
  auto c = classify(d, Structure::symmetric);
  EXPECT_TRUE(c.holds);
  EXPECT_EQ(c.residual, 0.0);
  EXPECT_TRUE(classify(RealMatrix{{0, -1}, {1, 0}}, Structure::skew).holds);
  c = classify(QuaternionMatrix{{Quaternion::i()}}, Structure::hermitian);
  EXPECT_FALSE(c.holds);
  EXPECT_DOUBLE_EQ(c.residual, 2.0);
  EXPECT_TRUE(classify(QuaternionMatrix{{Quaternion::i()}}, Structure::skew_hermitian).holds);
  EXPECT_THROW(classify(QuaternionMatrix{{Quaternion::i()}}, Structure::symmetric), DomainError);
  EXPECT_THROW(classify(d, Structure::hermitian), DomainError);
  EXPECT_THROW(classify(RealMatrix(2, 3), Structure::general), DimensionError);
  EXPECT_FALSE(classify(RealMatrix{{0, 1e-6}, {0, 0}}, Structure::symmetric).holds);
  EXPECT_TRUE(classify(RealMatrix{{0, 1e-6}, {0, 0}}, Structure::symmetric, 1e-5).holds);
}

TEST(Matrix, ProjectionsLandInTheirClass) {
  Rng rng(26);
  const auto check = [&]<Scalar S>(Structure tag) {
    const auto a = gaussian_matrix<S>(rng, 4, 4);
    const auto p = project_structure(a, tag);
    EXPECT_TRUE(classify(p, tag).holds) << to_string(tag);
    EXPECT_LT(frob_norm(project_structure(p, tag) - p), 1e-14);
    // the residual a - p is orthogonal to the subspace
    EXPECT_NEAR(frob_inner(a - p, p), 0.0, 1e-12);
  };
  check.operator()<double>(Structure::symmetric);
  check.operator()<double>(Structure::skew);
  check.operator()<Complex>(Structure::symmetric);
  check.operator()<Complex>(Structure::skew);
  check.operator()<Complex>(Structure::hermitian);
  check.operator()<Complex>(Structure::skew_hermitian);
  check.operator()<Quaternion>(Structure::hermitian);
  check.operator()<Quaternion>(Structure::skew_hermitian);
}

TEST(Matrix, HermitianSplit) {
  Rng rng(27);
  const auto h = project_structure(gaussian_matrix<Complex>(rng, 3, 3), Structure::hermitian);
  auto [h1, h2] = hermitian_split(h);
  EXPECT_LT(frob_norm(h1 - h), 1e-15);
  EXPECT_LT(frob_norm(h2), 1e-15);

  auto [q1, q2] = hermitian_split(QuaternionMatrix{{Quaternion::i()}});
  EXPECT_EQ(frob_norm(q1), 0.0);
  EXPECT_EQ(q2(0, 0).x, 1.0);

  for (int t = 0; t < 20; ++t) {
    const auto b = gaussian_matrix<Complex>(rng, 3, 3);
    auto [b1, b2] = hermitian_split(b);
    EXPECT_LT(frob_norm(b1 + b2 - b), 1e-12);
    EXPECT_NEAR(frob_inner(b1, b2), 0.0, 1e-12);
    EXPECT_TRUE(classify(b1, Structure::hermitian).holds);
    EXPECT_TRUE(classify(b2, Structure::skew_hermitian).holds);
  }
}

// Scalar identity from the Jacobi step of the complex decomposition.
TEST(Matrix, JacobiInnerProductIdentity) {
  Rng rng(28);
  for (int t = 0; t < 200; ++t) {
    const auto r1 = random_structured<Complex>(rng, 3, Structure::hermitian);
    const auto s1 = random_structured<Complex>(rng, 3, Structure::hermitian);
    const auto r2 = random_structured<Complex>(rng, 3, Structure::skew_hermitian);
    const auto s2 = random_structured<Complex>(rng, 3, Structure::skew_hermitian);
    const double lhs = frob_inner(commutator(r1, s1), commutator(r2, s2)) + frob_inner(commutator(r1, s2), commutator(r2, s1));
    const double rhs = -frob_inner(commutator(r1, r2), commutator(s1, s2));
    EXPECT_NEAR(lhs, rhs, 1e-10 * (1 + std::abs(rhs)));
  }
}

TEST(Matrix, ClassNames) {
  const auto all = MatrixClass::all();
  EXPECT_EQ(all.size(), 12u);
  std::set<std::string> names;
  for (const auto& c : all) {
    EXPECT_TRUE(c.valid()) << c.name();
    EXPECT_EQ(MatrixClass::parse(c.name()), c);
    names.insert(c.name());
  }
  EXPECT_EQ(names.size(), all.size());
  EXPECT_THROW(MatrixClass::parse("quaternion-hermitian"), DomainError);
  EXPECT_THROW(MatrixClass::parse("real-hermitian"), DomainError);
  EXPECT_FALSE((MatrixClass{ScalarKind::quaternion, Structure::hermitian}.valid()));
  EXPECT_FALSE((MatrixClass{ScalarKind::quaternion, Structure::symmetric}.valid()));
  EXPECT_FALSE((MatrixClass{ScalarKind::complex, Structure::clifford_system}.valid()));
}

TEST(Matrix, BlockHelpers) {
  const RealMatrix a{{1}}, b{{2}}, c{{3}}, d{{4}};
  EXPECT_EQ(frob_norm(block2x2(a, b, c, d) - RealMatrix{{1, 2}, {3, 4}}), 0.0);
  const std::vector<RealMatrix> blocks{a, RealMatrix{{5, 6}, {7, 8}}};
  EXPECT_EQ(frob_norm(direct_sum<double>(blocks) - RealMatrix{{1, 0, 0}, {0, 5, 6}, {0, 7, 8}}), 0.0);
  EXPECT_EQ(frob_norm(pad_to(a, 2) - RealMatrix{{1, 0}, {0, 0}}), 0.0);
  const RealMatrix k = kron(RealMatrix{{0, 1}, {1, 0}}, RealMatrix{{1, 2}, {3, 4}});
  EXPECT_EQ(frob_norm(k - RealMatrix{{0, 0, 1, 2}, {0, 0, 3, 4}, {1, 2, 0, 0}, {3, 4, 0, 0}}), 0.0);
  EXPECT_THROW(block2x2(a, RealMatrix(2, 2), c, d), DimensionError);
}

TYPED_TEST(AllKinds, RandomUnitaryIsUnitary) {
  using S = TypeParam;
  Rng rng(29);
  for (std::size_t n : {1u, 2u, 4u}) {
    const auto u = random_unitary<S>(rng, n);
    EXPECT_LT(frob_norm(matmul(adjoint(u), u) - Matrix<S>::identity(n)), 1e-12);
    EXPECT_LT(frob_norm(matmul(u, adjoint(u)) - Matrix<S>::identity(n)), 1e-12);
  }
}

TEST(Random, StreamsAreDistinctAndReproducible) {
  std::set<std::uint64_t> seen;
  for (std::uint64_t s = 0; s < 1000; ++s) seen.insert(derive_seed(7, s));
  EXPECT_EQ(seen.size(), 1000u);
  EXPECT_NE(derive_seed(7, 0), derive_seed(8, 0));
  Rng a(derive_seed(1, 2)), b(derive_seed(1, 2));
  EXPECT_EQ(frob_norm(gaussian_matrix<Complex>(a, 3, 3) - gaussian_matrix<Complex>(b, 3, 3)), 0.0);
}

TEST(Parallel, EachIndexOnceAndErrorsPropagate) {
  std::vector<std::atomic<int>> hits(1000);
  parallel_for(hits.size(), 8, [&](std::size_t i) { ++hits[i]; });
  for (const auto& h : hits) EXPECT_EQ(h.load(), 1);
  EXPECT_THROW(parallel_for(100, 4,
                            [](std::size_t i) {
                              if (i == 37) throw DomainError("boom");
                            }),
               DomainError);
  EXPECT_GE(worker_count(), 1u);
}

}  // namespace
