#pragma once

// Optimal constants c of sum_{r,s} ‖[B_r, B_s]‖^2 <= c (sum_r ‖B_r‖^2)^2 per
// matrix class, and of the pairwise bound ‖[X, Y]‖^2 <= c ‖X‖^2 ‖Y‖^2.

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

#include "ddvv/clifford.hpp"
#include "ddvv/matrix.hpp"

namespace ddvv {

/// Reduced fraction with positive denominator.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  constexpr Rational() = default;
  constexpr Rational(std::int64_t n, std::int64_t d = 1) : num{n}, den{d} { normalize(); }

  constexpr void normalize() {
    if (den == 0) throw std::domain_error("zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  constexpr bool operator==(const Rational&) const = default;
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  std::string str() const { return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den); }

  static Rational parse(const std::string& text) {
    const auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(std::stoll(text));
    return Rational(std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1)));
  }
};

class UnderSpecifiedQuery : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Everything needed to pin down one constant. `count` is the tuple length
/// (m for matrix classes, M for Clifford spans); `frame_m` and `frame_k`
/// select the Clifford frame.
struct ConstantQuery {
  MatrixClass cls;
  int n = 0;
  int count = 0;
  int frame_m = 0;
  int frame_k = 0;
};

/// Boettcher-Wenzel constant: 2 over R and C, 4 over H.
constexpr Rational bw_constant(ScalarKind kind) {
  return kind == ScalarKind::quaternion ? Rational(4) : Rational(2);
}

inline Rational clifford_constant(FrameKind kind, int m, int k, int count) {
  if (k < 1 || m < 1) throw UnderSpecifiedQuery("Clifford constant needs frame m >= 1 and k >= 1");
  if (kind == FrameKind::algebra && m < 2) throw UnderSpecifiedQuery("Clifford algebra needs m >= 2");
  if (count < 1) throw UnderSpecifiedQuery("Clifford constant needs M >= 1");
  const std::int64_t l = k * delta(m);
  const std::int64_t gens = kind == FrameKind::system ? m + 1 : m - 1;
  const std::int64_t big_n = std::min<std::int64_t>(gens, count);
  // (2/l)(1 - 1/N) resp. (4/l)(1 - 1/N)
  const std::int64_t factor = kind == FrameKind::system ? 2 : 4;
  return Rational(factor * (big_n - 1), l * big_n);
}

inline Rational optimal_constant(const ConstantQuery& q) {
  const MatrixClass& c = q.cls;
  if (!c.valid()) throw UnderSpecifiedQuery("no constant for class " + c.name());
  if (q.count < 1) throw UnderSpecifiedQuery("tuple length must be >= 1");

  if (c.structure == Structure::clifford_system)
    return clifford_constant(FrameKind::system, q.frame_m, q.frame_k, q.count);
  if (c.structure == Structure::clifford_algebra)
    return clifford_constant(FrameKind::algebra, q.frame_m, q.frame_k, q.count);

  // One matrix commutes with itself; 1 x 1 real/complex matrices all commute.
  if (q.count == 1) return Rational(0);
  if (q.n == 1 && c.kind != ScalarKind::quaternion) return Rational(0);

  switch (c.structure) {
    case Structure::symmetric:
      return Rational(1);
    case Structure::skew:
      if (q.n < 1) throw UnderSpecifiedQuery("skew-symmetric constant depends on n");
      if (q.n == 2) return Rational(0);  // o(2) is one-dimensional
      return q.n == 3 ? Rational(1, 3) : Rational(2, 3);
    case Structure::hermitian:
    case Structure::skew_hermitian:
      if (c.kind == ScalarKind::quaternion) return q.count == 2 ? Rational(2) : Rational(8, 3);
      return q.count == 2 ? Rational(1) : Rational(4, 3);
    case Structure::general:
      if (c.kind == ScalarKind::quaternion) return q.count == 2 ? Rational(2) : Rational(8, 3);
      return q.count == 2 ? Rational(1) : Rational(4, 3);
    default:
      break;
  }
  throw UnderSpecifiedQuery("no constant for class " + c.name());
}

}  // namespace ddvv
