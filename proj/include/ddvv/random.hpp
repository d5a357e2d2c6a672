#pragma once

// Gaussian sampling of scalars, structured matrices, tuples and unitary groups.
// One root seed; independent streams come from derive_seed(root, index).

#include <cstdint>
#include <random>

#include "ddvv/matrix.hpp"

namespace ddvv {

using Rng = std::mt19937_64;

/// SplitMix64 finaliser applied to root + (stream + 1) * golden-ratio increment.
constexpr std::uint64_t derive_seed(std::uint64_t root, std::uint64_t stream) {
  std::uint64_t z = root + (stream + 1) * 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

template <Scalar S>
S gaussian(Rng& rng) {
  std::normal_distribution<double> nd;
  S s{};
  for (int c = 0; c < scalar_traits<S>::real_dim; ++c) scalar_traits<S>::set_component(s, c, nd(rng));
  return s;
}

template <Scalar S>
Matrix<S> gaussian_matrix(Rng& rng, std::size_t rows, std::size_t cols) {
  Matrix<S> m(rows, cols);
  for (auto& v : m.entries()) v = gaussian<S>(rng);
  return m;
}

/// Gaussian matrix projected onto `tag`; redrawn in the (measure-zero) event it projects to 0.
template <Scalar S>
Matrix<S> random_structured(Rng& rng, std::size_t n, Structure tag) {
  for (;;) {
    Matrix<S> m = project_structure(gaussian_matrix<S>(rng, n, n), tag);
    if (frob_norm2(m) > 0.0 || (n < 2 && (tag == Structure::skew || tag == Structure::clifford_algebra))) return m;
  }
}

template <Scalar S>
Tuple<S> random_tuple(Rng& rng, std::size_t n, std::size_t m, Structure tag) {
  Tuple<S> t;
  t.reserve(m);
  for (std::size_t r = 0; r < m; ++r) t.push_back(random_structured<S>(rng, n, tag));
  return t;
}

/// Haar-like unitary (orthogonal / symplectic for real / quaternion) by
/// Gram-Schmidt on Gaussian columns; scalars act on the right.
template <Scalar S>
Matrix<S> random_unitary(Rng& rng, std::size_t n) {
  Matrix<S> u = gaussian_matrix<S>(rng, n, n);
  for (std::size_t j = 0; j < n; ++j) {
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t i = 0; i < j; ++i) {
        S proj{};
        for (std::size_t k = 0; k < n; ++k) proj += conj(u(k, i)) * u(k, j);
        for (std::size_t k = 0; k < n; ++k) u(k, j) -= u(k, i) * proj;
      }
    }
    double nrm = 0.0;
    for (std::size_t k = 0; k < n; ++k) nrm += norm2(u(k, j));
    nrm = std::sqrt(nrm);
    for (std::size_t k = 0; k < n; ++k) u(k, j) *= 1.0 / nrm;
  }
  return u;
}

inline RealMatrix random_orthogonal(Rng& rng, std::size_t n) { return random_unitary<double>(rng, n); }

/// Unit column vector (n x 1).
template <Scalar S>
Matrix<S> random_unit_vector(Rng& rng, std::size_t n) {
  Matrix<S> v = gaussian_matrix<S>(rng, n, 1);
  return v * (1.0 / frob_norm(v));
}

}  // namespace ddvv
