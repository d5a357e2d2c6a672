#pragma once

// Scalar kinds used throughout the library: real (double), complex
// (std::complex<double>) and Hamilton quaternions.

#include <cmath>
#include <complex>
#include <concepts>
#include <ostream>
#include <string_view>
#include <type_traits>

namespace ddvv {

using Complex = std::complex<double>;

/// Quaternion w + x i + y j + z k.
struct Quaternion {
  double w = 0.0;
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  constexpr Quaternion() = default;
  constexpr Quaternion(double w_) : w{w_} {}  // NOLINT: reals embed implicitly
  constexpr Quaternion(double w_, double x_, double y_, double z_)
      : w{w_}, x{x_}, y{y_}, z{z_} {}

  static constexpr Quaternion i() { return {0, 1, 0, 0}; }
  static constexpr Quaternion j() { return {0, 0, 1, 0}; }
  static constexpr Quaternion k() { return {0, 0, 0, 1}; }

  constexpr bool operator==(const Quaternion&) const = default;

  constexpr Quaternion operator-() const { return {-w, -x, -y, -z}; }
  constexpr Quaternion& operator+=(const Quaternion& o) {
    w += o.w; x += o.x; y += o.y; z += o.z;
    return *this;
  }
  constexpr Quaternion& operator-=(const Quaternion& o) {
    w -= o.w; x -= o.x; y -= o.y; z -= o.z;
    return *this;
  }
  constexpr Quaternion& operator*=(double s) {
    w *= s; x *= s; y *= s; z *= s;
    return *this;
  }
};

constexpr Quaternion operator+(Quaternion a, const Quaternion& b) { return a += b; }
constexpr Quaternion operator-(Quaternion a, const Quaternion& b) { return a -= b; }
constexpr Quaternion operator*(Quaternion a, double s) { return a *= s; }
constexpr Quaternion operator*(double s, Quaternion a) { return a *= s; }

/// Hamilton product. Not commutative: qmul(i, j) == k, qmul(j, i) == -k.
constexpr Quaternion qmul(const Quaternion& a, const Quaternion& b) {
  return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
          a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
          a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
          a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
}

constexpr Quaternion operator*(const Quaternion& a, const Quaternion& b) { return qmul(a, b); }

constexpr Quaternion qconj(const Quaternion& a) { return {a.w, -a.x, -a.y, -a.z}; }

constexpr double q_re(const Quaternion& a) { return a.w; }

constexpr double q_norm2(const Quaternion& a) {
  return a.w * a.w + a.x * a.x + a.y * a.y + a.z * a.z;
}

inline std::ostream& operator<<(std::ostream& os, const Quaternion& q) {
  return os << '(' << q.w << " + " << q.x << "i + " << q.y << "j + " << q.z << "k)";
}

enum class ScalarKind { real, complex, quaternion };

constexpr std::string_view to_string(ScalarKind kind) {
  switch (kind) {
    case ScalarKind::real: return "real";
    case ScalarKind::complex: return "complex";
    case ScalarKind::quaternion: return "quaternion";
  }
  return "?";
}

template <class S>
concept Scalar = std::same_as<S, double> || std::same_as<S, Complex> || std::same_as<S, Quaternion>;

// Uniform access to the handful of operations every matrix routine needs.
template <Scalar S>
struct scalar_traits;

template <>
struct scalar_traits<double> {
  static constexpr ScalarKind kind = ScalarKind::real;
  static constexpr int real_dim = 1;
  static constexpr double conj(double a) { return a; }
  static constexpr double re(double a) { return a; }
  static constexpr double norm2(double a) { return a * a; }
  static double component(double a, int) { return a; }
  static void set_component(double& a, int, double v) { a = v; }
};

template <>
struct scalar_traits<Complex> {
  static constexpr ScalarKind kind = ScalarKind::complex;
  static constexpr int real_dim = 2;
  static Complex conj(const Complex& a) { return std::conj(a); }
  static double re(const Complex& a) { return a.real(); }
  static double norm2(const Complex& a) { return std::norm(a); }
  static double component(const Complex& a, int c) { return c == 0 ? a.real() : a.imag(); }
  static void set_component(Complex& a, int c, double v) {
    if (c == 0) a.real(v); else a.imag(v);
  }
};

template <>
struct scalar_traits<Quaternion> {
  static constexpr ScalarKind kind = ScalarKind::quaternion;
  static constexpr int real_dim = 4;
  static constexpr Quaternion conj(const Quaternion& a) { return qconj(a); }
  static constexpr double re(const Quaternion& a) { return a.w; }
  static constexpr double norm2(const Quaternion& a) { return q_norm2(a); }
  static double component(const Quaternion& a, int c) {
    switch (c) {
      case 0: return a.w;
      case 1: return a.x;
      case 2: return a.y;
      default: return a.z;
    }
  }
  static void set_component(Quaternion& a, int c, double v) {
    switch (c) {
      case 0: a.w = v; break;
      case 1: a.x = v; break;
      case 2: a.y = v; break;
      default: a.z = v; break;
    }
  }
};

template <Scalar S>
constexpr S conj(const S& a) { return scalar_traits<S>::conj(a); }

template <Scalar S>
constexpr double re(const S& a) { return scalar_traits<S>::re(a); }

template <Scalar S>
constexpr double norm2(const S& a) { return scalar_traits<S>::norm2(a); }

template <Scalar S>
inline constexpr ScalarKind kind_of = scalar_traits<S>::kind;

}  // namespace ddvv
