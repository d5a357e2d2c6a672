#pragma once

// Field-reduction homomorphisms
//   phi : M(n, C) -> M(2n, R),  X1 + X2 i  |->  [[X2, X1], [-X1, X2]]
//   psi : M(n, H) -> M(2n, C),  X1 + X2 j  |->  [[X1, X2], [-conj(X2), conj(X1)]]
// Quaternions split with j on the right: w + x i + y j + z k = (w + x i) + (y + z i) j.

#include "ddvv/matrix.hpp"

namespace ddvv {

enum class EmbeddingKind { phi, psi };

inline RealMatrix phi_embed(const ComplexMatrix& x) {
  if (!x.is_square()) throw DimensionError("phi_embed needs a square matrix");
  const std::size_t n = x.rows();
  RealMatrix x1(n, n), x2(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      x1(i, j) = x(i, j).real();
      x2(i, j) = x(i, j).imag();
    }
  }
  return block2x2(x2, x1, -x1, x2);
}

/// Complex parts (X1, X2) of X = X1 + X2 j.
inline std::pair<ComplexMatrix, ComplexMatrix> quaternion_split(const QuaternionMatrix& x) {
  ComplexMatrix x1(x.rows(), x.cols()), x2(x.rows(), x.cols());
  for (std::size_t i = 0; i < x.rows(); ++i) {
    for (std::size_t j = 0; j < x.cols(); ++j) {
      const Quaternion& q = x(i, j);
      x1(i, j) = {q.w, q.x};
      x2(i, j) = {q.y, q.z};
    }
  }
  return {x1, x2};
}

inline QuaternionMatrix quaternion_join(const ComplexMatrix& x1, const ComplexMatrix& x2) {
  if (!x1.same_shape(x2)) throw DimensionError("quaternion_join: shapes differ");
  QuaternionMatrix x(x1.rows(), x1.cols());
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t j = 0; j < x.cols(); ++j)
      x(i, j) = {x1(i, j).real(), x1(i, j).imag(), x2(i, j).real(), x2(i, j).imag()};
  return x;
}

inline ComplexMatrix psi_embed(const QuaternionMatrix& x) {
  if (!x.is_square()) throw DimensionError("psi_embed needs a square matrix");
  auto [x1, x2] = quaternion_split(x);
  return block2x2(x1, x2, -conjugate(x2), conjugate(x1));
}

/// ||[phi(X), phi(Y)] - phi(-i [X, Y])||.
inline double phi_commutator_identity_residual(const ComplexMatrix& x, const ComplexMatrix& y) {
  const ComplexMatrix rhs = scale_left(Complex{0.0, -1.0}, commutator(x, y));
  return frob_norm(commutator(phi_embed(x), phi_embed(y)) - phi_embed(rhs));
}

/// ||[psi(X), psi(Y)] - psi([X, Y])||.
inline double psi_commutator_identity_residual(const QuaternionMatrix& x, const QuaternionMatrix& y) {
  return frob_norm(commutator(psi_embed(x), psi_embed(y)) - psi_embed(commutator(x, y)));
}

}  // namespace ddvv
