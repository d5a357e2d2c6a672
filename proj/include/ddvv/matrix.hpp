#pragma once

// Dense row-major matrices over real, complex and quaternionic scalars with
// Frobenius geometry. Products keep the left-to-right order of entries, which
// matters for quaternions.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ddvv/scalar.hpp"

namespace ddvv {

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

template <Scalar S>
class Matrix {
 public:
  using value_type = S;

  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_{rows}, cols_{cols}, data_(rows * cols, S{}) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<S> entries)
      : rows_{rows}, cols_{cols}, data_{std::move(entries)} {
    if (data_.size() != rows_ * cols_) throw DimensionError("entry count does not match shape");
  }
  Matrix(std::initializer_list<std::initializer_list<S>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) throw DimensionError("ragged initializer");
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }

  static Matrix zeros(std::size_t n) { return Matrix(n, n); }
  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = S{1.0};
    return m;
  }
  static Matrix diagonal(std::span<const S> d) {
    Matrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool same_shape(const Matrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_; }

  S& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const S& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<S> entries() { return data_; }
  std::span<const S> entries() const { return data_; }

  bool operator==(const Matrix&) const = default;

  Matrix& operator+=(const Matrix& o) {
    require_same_shape(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    require_same_shape(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
  }
  Matrix& operator*=(double s) {
    for (auto& v : data_) v *= s;
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, double s) { return a *= s; }
  friend Matrix operator*(double s, Matrix a) { return a *= s; }
  friend Matrix operator-(Matrix a) { return a *= -1.0; }

 private:
  void require_same_shape(const Matrix& o) const {
    if (!same_shape(o)) throw DimensionError("matrix shapes differ");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<S> data_;
};

using RealMatrix = Matrix<double>;
using ComplexMatrix = Matrix<Complex>;
using QuaternionMatrix = Matrix<Quaternion>;

/// Left scalar multiple s * A (entrywise s * a_ij).
template <Scalar S>
Matrix<S> scale_left(const S& s, Matrix<S> a) {
  for (auto& v : a.entries()) v = s * v;
  return a;
}

/// Right scalar multiple A * s (entrywise a_ij * s).
template <Scalar S>
Matrix<S> scale_right(Matrix<S> a, const S& s) {
  for (auto& v : a.entries()) v = v * s;
  return a;
}

template <Scalar S>
Matrix<S> matmul(const Matrix<S>& a, const Matrix<S>& b) {
  if (a.cols() != b.rows()) {
    throw DimensionError("matmul: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                         " times " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
  Matrix<S> c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const S& aik = a(i, k);
      if (aik == S{}) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

template <Scalar S>
Matrix<S> operator*(const Matrix<S>& a, const Matrix<S>& b) {
  return matmul(a, b);
}

template <Scalar S>
Matrix<S> transpose(const Matrix<S>& a) {
  Matrix<S> t(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
  return t;
}

/// Entrywise conjugate (no transpose).
template <Scalar S>
Matrix<S> conjugate(Matrix<S> a) {
  for (auto& v : a.entries()) v = conj(v);
  return a;
}

/// Conjugate transpose A*.
template <Scalar S>
Matrix<S> adjoint(const Matrix<S>& a) {
  Matrix<S> t(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = conj(a(i, j));
  return t;
}

template <Scalar S>
Matrix<S> commutator(const Matrix<S>& x, const Matrix<S>& y) {
  if (!x.is_square() || !x.same_shape(y)) throw DimensionError("commutator needs equal square matrices");
  return matmul(x, y) - matmul(y, x);
}

/// Real part of the trace. The bare trace of a quaternionic product is not
/// cyclic, so nothing else in the library exposes it.
template <Scalar S>
double re_trace(const Matrix<S>& a) {
  if (!a.is_square()) throw DimensionError("trace of non-square matrix");
  double t = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i) t += re(a(i, i));
  return t;
}

/// Frobenius inner product Re tr(A B*), computed entrywise as sum Re(a_ij conj(b_ij)).
template <Scalar S>
double frob_inner(const Matrix<S>& a, const Matrix<S>& b) {
  if (!a.same_shape(b)) throw DimensionError("frob_inner: shapes differ");
  double s = 0.0;
  auto ea = a.entries();
  auto eb = b.entries();
  for (std::size_t i = 0; i < ea.size(); ++i) s += re(ea[i] * conj(eb[i]));
  return s;
}

template <Scalar S>
double frob_norm2(const Matrix<S>& a) {
  double s = 0.0;
  for (const auto& v : a.entries()) s += norm2(v);
  return s;
}

template <Scalar S>
double frob_norm(const Matrix<S>& a) {
  return std::sqrt(frob_norm2(a));
}

template <Scalar S>
double max_abs(const Matrix<S>& a) {
  double m = 0.0;
  for (const auto& v : a.entries()) m = std::max(m, std::sqrt(norm2(v)));
  return m;
}

/// Block matrix [[a, b], [c, d]] for equal square blocks.
template <Scalar S>
Matrix<S> block2x2(const Matrix<S>& a, const Matrix<S>& b, const Matrix<S>& c, const Matrix<S>& d) {
  const std::size_t n = a.rows();
  for (const auto* m : {&a, &b, &c, &d})
    if (m->rows() != n || m->cols() != n) throw DimensionError("block2x2 needs equal square blocks");
  Matrix<S> out(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      out(i, j) = a(i, j);
      out(i, j + n) = b(i, j);
      out(i + n, j) = c(i, j);
      out(i + n, j + n) = d(i, j);
    }
  }
  return out;
}

/// Block-diagonal direct sum of the given square blocks.
template <Scalar S>
Matrix<S> direct_sum(std::span<const Matrix<S>> blocks) {
  std::size_t n = 0;
  for (const auto& b : blocks) n += b.rows();
  Matrix<S> out(n, n);
  std::size_t off = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) out(off + i, off + j) = b(i, j);
    off += b.rows();
  }
  return out;
}

/// Embed `a` as the leading block of an n x n zero matrix: diag(a, 0).
template <Scalar S>
Matrix<S> pad_to(const Matrix<S>& a, std::size_t n) {
  if (a.rows() > n || a.cols() > n) throw DimensionError("pad_to: block larger than target");
  Matrix<S> out(n, n);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
  return out;
}

/// Kronecker product (real matrices only; used for Clifford constructions).
inline RealMatrix kron(const RealMatrix& a, const RealMatrix& b) {
  RealMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      for (std::size_t p = 0; p < b.rows(); ++p)
        for (std::size_t q = 0; q < b.cols(); ++q)
          out(i * b.rows() + p, j * b.cols() + q) = a(i, j) * b(p, q);
  return out;
}

// ---------------------------------------------------------------------------
// Structure tags and matrix classes

enum class Structure {
  general,
  symmetric,
  skew,
  hermitian,
  skew_hermitian,
  clifford_system,
  clifford_algebra,
};

constexpr std::string_view to_string(Structure s) {
  switch (s) {
    case Structure::general: return "general";
    case Structure::symmetric: return "symmetric";
    case Structure::skew: return "skew";
    case Structure::hermitian: return "hermitian";
    case Structure::skew_hermitian: return "skew-hermitian";
    case Structure::clifford_system: return "clifford-system";
    case Structure::clifford_algebra: return "clifford-algebra";
  }
  return "?";
}

/// Whether a structural predicate makes sense for a scalar kind.
/// Symmetric/skew use the plain transpose and are defined over R and C;
/// Hermitian tags need a non-trivial conjugation; Clifford spans are real.
constexpr bool structure_applies(ScalarKind kind, Structure s) {
  switch (s) {
    case Structure::general: return true;
    case Structure::symmetric:
    case Structure::skew: return kind != ScalarKind::quaternion;
    case Structure::hermitian:
    case Structure::skew_hermitian: return kind != ScalarKind::real;
    case Structure::clifford_system:
    case Structure::clifford_algebra: return kind == ScalarKind::real;
  }
  return false;
}

/// A matrix category with an inequality constant of its own.
struct MatrixClass {
  ScalarKind kind = ScalarKind::real;
  Structure structure = Structure::general;

  bool operator==(const MatrixClass&) const = default;

  bool is_clifford() const {
    return structure == Structure::clifford_system || structure == Structure::clifford_algebra;
  }

  /// Quaternionic Hermitian is a valid predicate but not a class: no sharp
  /// constant is known for it.
  bool valid() const {
    if (!structure_applies(kind, structure)) return false;
    return !(kind == ScalarKind::quaternion && structure == Structure::hermitian);
  }

  /// CLI / file name, e.g. "complex-hermitian", "clifford-system".
  std::string name() const {
    if (is_clifford()) return std::string(to_string(structure));
    return std::string(to_string(kind)) + "-" + std::string(to_string(structure));
  }

  static MatrixClass parse(std::string_view text);
  static std::vector<MatrixClass> all();
};

inline std::vector<MatrixClass> MatrixClass::all() {
  using K = ScalarKind;
  using T = Structure;
  return {
      {K::real, T::general},          {K::real, T::symmetric},
      {K::real, T::skew},             {K::complex, T::general},
      {K::complex, T::symmetric},     {K::complex, T::skew},
      {K::complex, T::hermitian},     {K::complex, T::skew_hermitian},
      {K::quaternion, T::general},    {K::quaternion, T::skew_hermitian},
      {K::real, T::clifford_system},  {K::real, T::clifford_algebra},
  };
}

inline MatrixClass MatrixClass::parse(std::string_view text) {
  for (const auto& c : all())
    if (c.name() == text) return c;
  throw DomainError("unknown matrix class '" + std::string(text) + "'");
}

/// Result of a structural predicate check.
struct Classification {
  bool holds = false;
  double residual = 0.0;
};

inline constexpr double kStructureTolerance = 1e-10;

/// Residual of the structural predicate: ||A - A^t|| (symmetric), ||A + A^t||
/// (skew), ||A - A*|| (Hermitian), ||A + A*|| (skew-Hermitian). Clifford tags
/// check only the symmetric/skew part; span membership lives in clifford.hpp.
template <Scalar S>
Classification classify(const Matrix<S>& a, Structure tag, double tol = kStructureTolerance) {
  if (!a.is_square()) throw DimensionError("classify needs a square matrix");
  if (!structure_applies(kind_of<S>, tag)) {
    throw DomainError("structure '" + std::string(to_string(tag)) + "' does not apply to " +
                      std::string(to_string(kind_of<S>)) + " matrices");
  }
  double r = 0.0;
  switch (tag) {
    case Structure::general: r = 0.0; break;
    case Structure::symmetric:
    case Structure::clifford_system: r = frob_norm(a - transpose(a)); break;
    case Structure::skew:
    case Structure::clifford_algebra: r = frob_norm(a + transpose(a)); break;
    case Structure::hermitian: r = frob_norm(a - adjoint(a)); break;
    case Structure::skew_hermitian: r = frob_norm(a + adjoint(a)); break;
  }
  return {r <= tol, r};
}

/// Orthogonal projection onto the structure subspace (identity for general).
template <Scalar S>
Matrix<S> project_structure(const Matrix<S>& a, Structure tag) {
  switch (tag) {
    case Structure::general: return a;
    case Structure::symmetric:
    case Structure::clifford_system: return 0.5 * (a + transpose(a));
    case Structure::skew:
    case Structure::clifford_algebra: return 0.5 * (a - transpose(a));
    case Structure::hermitian: return 0.5 * (a + adjoint(a));
    case Structure::skew_hermitian: return 0.5 * (a - adjoint(a));
  }
  return a;
}

/// B = B1 + B2 with B1 = (B + B*)/2 Hermitian and B2 = (B - B*)/2 skew-Hermitian.
template <Scalar S>
std::pair<Matrix<S>, Matrix<S>> hermitian_split(const Matrix<S>& b) {
  if (!b.is_square()) throw DimensionError("hermitian_split needs a square matrix");
  const Matrix<S> bs = adjoint(b);
  return {0.5 * (b + bs), 0.5 * (b - bs)};
}

/// An ordered tuple (B_1, ..., B_m) of equal-size square matrices.
template <Scalar S>
using Tuple = std::vector<Matrix<S>>;

template <Scalar S>
std::size_t tuple_size_n(const Tuple<S>& t) {
  if (t.empty()) throw DimensionError("empty tuple");
  const std::size_t n = t.front().rows();
  for (const auto& b : t)
    if (b.rows() != n || b.cols() != n) throw DimensionError("tuple members must be square and of equal size");
  return n;
}

template <Scalar S>
double tuple_norm2(const Tuple<S>& t) {
  double s = 0.0;
  for (const auto& b : t) s += frob_norm2(b);
  return s;
}

template <Scalar S>
double tuple_inner(const Tuple<S>& a, const Tuple<S>& b) {
  if (a.size() != b.size()) throw DimensionError("tuple lengths differ");
  double s = 0.0;
  for (std::size_t r = 0; r < a.size(); ++r) s += frob_inner(a[r], b[r]);
  return s;
}

template <Scalar S>
Tuple<S> scaled(Tuple<S> t, double s) {
  for (auto& b : t) b *= s;
  return t;
}

}  // namespace ddvv
