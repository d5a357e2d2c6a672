#pragma once

// Inequality engine: both sides of the commutator inequality, the pairwise
// (Boettcher-Wenzel) bound, the Gram lower bound, the U(n) x O(m) action and
// the computable equality conditions.

#include <map>
#include <optional>
#include <string>

#include "ddvv/clifford.hpp"
#include "ddvv/constants.hpp"
#include "ddvv/embedding.hpp"
#include "ddvv/matrix.hpp"

namespace ddvv {

/// sum over ordered pairs (r, s) of ‖[B_r, B_s]‖^2; every unordered pair counts twice.
template <Scalar S>
double ddvv_lhs(const Tuple<S>& t) {
  tuple_size_n(t);
  double s = 0.0;
  for (std::size_t r = 0; r < t.size(); ++r)
    for (std::size_t q = r + 1; q < t.size(); ++q) s += 2.0 * frob_norm2(commutator(t[r], t[q]));
  return s;
}

/// (sum_r ‖B_r‖^2)^2
template <Scalar S>
double ddvv_rhs(const Tuple<S>& t) {
  tuple_size_n(t);
  const double s = tuple_norm2(t);
  return s * s;
}

struct BwReport {
  double lhs = 0.0;
  double bound = 0.0;
};

template <Scalar S>
BwReport bw_report(const Matrix<S>& x, const Matrix<S>& y) {
  const double c = bw_constant(kind_of<S>).value();
  return {frob_norm2(commutator(x, y)), c * frob_norm2(x) * frob_norm2(y)};
}

struct GramBound {
  double lhs = 0.0;
  double bound = 0.0;
};

/// ‖B B^t‖^2 >= ‖B‖^4 / N with N = min(rows, cols).
inline GramBound gram_bound_residual(const RealMatrix& b) {
  if (b.rows() == 0 || b.cols() == 0) throw DimensionError("gram_bound_residual needs a nonempty matrix");
  const double n = static_cast<double>(std::min(b.rows(), b.cols()));
  const double s = frob_norm2(b);
  return {frob_norm2(matmul(b, transpose(b))), s * s / n};
}

struct DdvvReport {
  double lhs = 0.0;
  double rhs = 0.0;
  double ratio = 0.0;  // 0 when rhs == 0
  Rational constant;
  double c = 0.0;
  double slack = 0.0;  // c * rhs - lhs
  std::map<std::string, double> equality_residuals;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> iterations;
};

/// c * rhs - lhs evaluated with the exact fraction, so integer-entried
/// extremals give an exact zero.
inline double exact_slack(const Rational& c, double lhs, double rhs) {
  return (static_cast<double>(c.num) * rhs - static_cast<double>(c.den) * lhs) / static_cast<double>(c.den);
}

template <Scalar S>
Tuple<S> k_action(const Matrix<S>& p, const RealMatrix& rot, const Tuple<S>& t, double tol = 1e-9) {
  const std::size_t n = tuple_size_n(t);
  if (p.rows() != n || p.cols() != n) throw DimensionError("k_action: P does not match tuple size");
  if (rot.rows() != t.size() || rot.cols() != t.size()) throw DimensionError("k_action: R does not match tuple length");
  const Matrix<S> ps = adjoint(p);
  if (frob_norm(matmul(ps, p) - Matrix<S>::identity(n)) > tol * std::sqrt(static_cast<double>(n)))
    throw DomainError("k_action: P is not unitary");
  if (frob_norm(matmul(transpose(rot), rot) - RealMatrix::identity(t.size())) > tol * std::sqrt(static_cast<double>(t.size())))
    throw DomainError("k_action: R is not orthogonal");
  Tuple<S> conj_t;
  conj_t.reserve(t.size());
  for (const auto& a : t) conj_t.push_back(matmul(matmul(ps, a), p));
  Tuple<S> out(t.size(), Matrix<S>(n, n));
  for (std::size_t k = 0; k < t.size(); ++k)
    for (std::size_t j = 0; j < t.size(); ++j)
      if (rot(j, k) != 0.0) out[k] += rot(j, k) * conj_t[j];
  return out;
}

namespace detail {

template <Scalar S>
S full_trace(const Matrix<S>& a) {
  S t{};
  for (std::size_t i = 0; i < a.rows(); ++i) t += a(i, i);
  return t;
}

inline void gram_defects(const RealMatrix& gram, const std::string& prefix, double scale,
                         std::map<std::string, double>& out) {
  double off = 0.0;
  double lo = 0.0;
  double hi = 0.0;
  for (std::size_t i = 0; i < gram.rows(); ++i) {
    lo = i == 0 ? gram(i, i) : std::min(lo, gram(i, i));
    hi = i == 0 ? gram(i, i) : std::max(hi, gram(i, i));
    for (std::size_t j = 0; j < gram.cols(); ++j)
      if (i != j) off = std::max(off, std::abs(gram(i, j)));
  }
  out[prefix + "_gram_offdiag"] = scale > 0 ? off / scale : 0.0;
  out[prefix + "_gram_spread"] = scale > 0 ? (hi - lo) / scale : 0.0;
}

}  // namespace detail

/// Computable necessary conditions for equality, each normalised to be
/// dimensionless (divided by sum_r ‖B_r‖^2 or the Gram trace), plus the
/// absolute and relative slack.
template <Scalar S>
std::map<std::string, double> equality_residuals(const Tuple<S>& t, const ConstantQuery& q) {
  std::map<std::string, double> res;
  const double lhs = ddvv_lhs(t);
  const double rhs = ddvv_rhs(t);
  const Rational c = optimal_constant(q);
  const double slack = exact_slack(c, lhs, rhs);
  res["slack"] = slack;
  res["relative_slack"] = rhs > 0 ? slack / rhs : 0.0;
  const double total = tuple_norm2(t);
  const auto rel = [total](double v) { return total > 0 ? v / total : 0.0; };
  const MatrixClass& cls = q.cls;

  if constexpr (std::is_same_v<S, double>) {
    if (cls.is_clifford()) {
      const FrameKind fk = cls.structure == Structure::clifford_system ? FrameKind::system : FrameKind::algebra;
      const CliffordFrame frame = build_frame(fk, q.frame_m, q.frame_k);
      const RealMatrix coeffs = coefficient_vectors(frame, t);
      const double cn2 = frob_norm2(coeffs);
      if (frame.count() <= t.size())
        detail::gram_defects(matmul(transpose(coeffs), coeffs), "frame", cn2, res);
      else
        detail::gram_defects(matmul(coeffs, transpose(coeffs)), "member", cn2, res);
      return res;
    }
  }

  const bool transpose_family = cls.structure == Structure::symmetric || cls.structure == Structure::skew;
  if (transpose_family) {
    if constexpr (std::is_same_v<S, Complex>) {
      Matrix<S> sum(t.front().rows(), t.front().cols());
      for (const auto& b : t) sum += commutator(b, conjugate(b));
      res["conj_sum"] = rel(frob_norm(sum));
    }
    return res;
  }

  if (t.size() == 2) {
    res["pair_inner"] = rel(std::abs(frob_inner(t[0], t[1])));
    res["pair_norm_gap"] = rel(std::abs(frob_norm2(t[0]) - frob_norm2(t[1])));
    double tr = 0.0;
    for (const auto& b : t) {
      if constexpr (std::is_same_v<S, Quaternion>)
        tr += re_trace(b) * re_trace(b);
      else
        tr += norm2(detail::full_trace(b));
    }
    res["trace"] = rel(tr);
    return res;
  }

  if constexpr (std::is_same_v<S, Quaternion>) {
    ComplexMatrix sum(2 * t.front().rows(), 2 * t.front().rows());
    for (const auto& b : t) {
      const ComplexMatrix pb = psi_embed(b);
      sum += commutator(pb, adjoint(pb));
    }
    res["psi_normal_sum"] = rel(frob_norm(sum));
  } else {
    Matrix<S> sum(t.front().rows(), t.front().cols());
    for (const auto& b : t) sum += commutator(b, adjoint(b));
    res["normal_sum"] = rel(frob_norm(sum));
  }
  return res;
}

template <Scalar S>
DdvvReport evaluate(const Tuple<S>& t, const ConstantQuery& q) {
  DdvvReport rep;
  rep.lhs = ddvv_lhs(t);
  rep.rhs = ddvv_rhs(t);
  rep.ratio = rep.rhs > 0 ? rep.lhs / rep.rhs : 0.0;
  rep.constant = optimal_constant(q);
  rep.c = rep.constant.value();
  rep.slack = exact_slack(rep.constant, rep.lhs, rep.rhs);
  rep.equality_residuals = equality_residuals(t, q);
  return rep;
}

/// Largest equality residual other than the slack entries.
inline double worst_condition(const std::map<std::string, double>& res) {
  double w = 0.0;
  for (const auto& [name, v] : res)
    if (name != "slack" && name != "relative_slack") w = std::max(w, std::abs(v));
  return w;
}

}  // namespace ddvv
