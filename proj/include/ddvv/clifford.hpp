#pragma once

// Integer-entried Clifford systems and Clifford algebras.
//
// An algebra frame (E_1, ..., E_{m-1}) on R^l consists of skew-symmetric
// orthogonal matrices with E_i E_j + E_j E_i = -2 delta_ij I. A system frame
// (P_0, ..., P_m) on R^{2l} consists of symmetric orthogonal matrices with
// P_i P_j + P_j P_i = 2 delta_ij I. Here l = k * delta(m).
//
// Irreducible algebra models:
//   m = 2      E_1 = [[0, 1], [-1, 0]]
//   m = 3, 4   left multiplication by i, j (, k) on H = R^4, basis (1, i, j, k)
//   m = 5..8   left multiplication by e_1 .. e_{m-1} on O = R^8, where the
//              octonions are the Cayley-Dickson double of H:
//              (a, b)(c, d) = (ac - conj(d) b, d a + b conj(c)),
//              basis e_0..e_7 = (1,0) (i,0) (j,0) (k,0) (0,1) (0,i) (0,j) (0,k)
//   m >= 9     G_1..G_8 on R^16 (G_j = L_{e_j} (x) diag(1,-1) for j <= 7,
//              G_8 = I_8 (x) [[0,1],[-1,0]]) with omega = G_1 ... G_8, then
//              (I (x) G_1, ..., I (x) G_8, E'_1 (x) omega, ...) where E' is the
//              irreducible frame for m - 8.
// Frames for m and m + 1 with delta(m) == delta(m + 1) are nested prefixes.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "ddvv/matrix.hpp"

namespace ddvv {

enum class FrameKind { system, algebra };

constexpr std::string_view to_string(FrameKind k) {
  return k == FrameKind::system ? "system" : "algebra";
}

/// Dimension of the irreducible representation: 1,2,4,4,8,8,8,8 then
/// delta(m + 8) = 16 delta(m).
inline std::int64_t delta(int m) {
  if (m < 1) throw DomainError("delta(m) needs m >= 1");
  static constexpr std::array<std::int64_t, 8> base{1, 2, 4, 4, 8, 8, 8, 8};
  std::int64_t scale = 1;
  while (m > 8) {
    m -= 8;
    scale *= 16;
  }
  return scale * base[static_cast<std::size_t>(m - 1)];
}

struct CliffordFrame {
  FrameKind kind = FrameKind::system;
  std::vector<RealMatrix> generators;
  int m = 1;
  int k = 1;
  std::int64_t delta = 1;
  std::int64_t l = 1;

  /// Side length of the generator matrices: 2l for systems, l for algebras.
  std::size_t size() const { return static_cast<std::size_t>(kind == FrameKind::system ? 2 * l : l); }
  std::size_t count() const { return generators.size(); }
  /// Common squared Frobenius norm of every generator.
  double generator_norm2() const { return static_cast<double>(size()); }
  Structure structure() const {
    return kind == FrameKind::system ? Structure::clifford_system : Structure::clifford_algebra;
  }
};

namespace detail {

inline RealMatrix left_mult_quaternion(const Quaternion& q) {
  const std::array<Quaternion, 4> basis{Quaternion{1.0}, Quaternion::i(), Quaternion::j(), Quaternion::k()};
  RealMatrix l(4, 4);
  for (std::size_t c = 0; c < 4; ++c) {
    const Quaternion p = qmul(q, basis[c]);
    l(0, c) = p.w;
    l(1, c) = p.x;
    l(2, c) = p.y;
    l(3, c) = p.z;
  }
  return l;
}

struct Octonion {
  Quaternion a, b;
};

inline Octonion omul(const Octonion& x, const Octonion& y) {
  return {qmul(x.a, y.a) - qmul(qconj(y.b), x.b), qmul(y.b, x.a) + qmul(x.b, qconj(y.a))};
}

inline Octonion octonion_basis(int e) {
  Octonion o;
  Quaternion& part = e < 4 ? o.a : o.b;
  switch (e % 4) {
    case 0: part = Quaternion{1.0}; break;
    case 1: part = Quaternion::i(); break;
    case 2: part = Quaternion::j(); break;
    default: part = Quaternion::k(); break;
  }
  return o;
}

inline RealMatrix left_mult_octonion(int e) {
  const Octonion x = octonion_basis(e);
  RealMatrix l(8, 8);
  for (int c = 0; c < 8; ++c) {
    const Octonion p = omul(x, octonion_basis(c));
    const std::array<double, 8> coords{p.a.w, p.a.x, p.a.y, p.a.z, p.b.w, p.b.x, p.b.y, p.b.z};
    for (std::size_t r = 0; r < 8; ++r) l(r, static_cast<std::size_t>(c)) = coords[r];
  }
  return l;
}

// Eight anticommuting complex structures on R^16.
inline std::vector<RealMatrix> bott_generators() {
  const RealMatrix sigma{{1.0, 0.0}, {0.0, -1.0}};
  const RealMatrix rot{{0.0, 1.0}, {-1.0, 0.0}};
  std::vector<RealMatrix> g;
  for (int e = 1; e <= 7; ++e) g.push_back(kron(left_mult_octonion(e), sigma));
  g.push_back(kron(RealMatrix::identity(8), rot));
  return g;
}

// m - 1 generators on R^{delta(m)}.
inline std::vector<RealMatrix> irreducible_algebra(int m) {
  if (m == 1) return {};
  if (m == 2) return {RealMatrix{{0.0, 1.0}, {-1.0, 0.0}}};
  if (m <= 4) {
    const std::array<Quaternion, 3> units{Quaternion::i(), Quaternion::j(), Quaternion::k()};
    std::vector<RealMatrix> g;
    for (int i = 0; i < m - 1; ++i) g.push_back(left_mult_quaternion(units[static_cast<std::size_t>(i)]));
    return g;
  }
  if (m <= 8) {
    std::vector<RealMatrix> g;
    for (int e = 1; e <= m - 1; ++e) g.push_back(left_mult_octonion(e));
    return g;
  }
  const std::vector<RealMatrix> base = irreducible_algebra(m - 8);
  const std::size_t d = static_cast<std::size_t>(delta(m - 8));
  const std::vector<RealMatrix> gs = bott_generators();
  RealMatrix omega = RealMatrix::identity(16);
  for (const auto& gj : gs) omega = matmul(omega, gj);
  std::vector<RealMatrix> out;
  out.reserve(static_cast<std::size_t>(m - 1));
  const RealMatrix id = RealMatrix::identity(d);
  for (const auto& gj : gs) out.push_back(kron(id, gj));
  for (const auto& e : base) out.push_back(kron(e, omega));
  return out;
}

inline std::vector<RealMatrix> repeat_blocks(const std::vector<RealMatrix>& irr, int k) {
  std::vector<RealMatrix> out;
  out.reserve(irr.size());
  for (const auto& g : irr) {
    const std::vector<RealMatrix> copies(static_cast<std::size_t>(k), g);
    out.push_back(direct_sum<double>(copies));
  }
  return out;
}

}  // namespace detail

/// Clifford algebra frame E_1..E_{m-1} on R^{k delta(m)}, k copies of the
/// irreducible model on the block diagonal.
inline CliffordFrame build_algebra(int m, int k) {
  if (m < 2) throw DomainError("build_algebra needs m >= 2");
  if (k < 1) throw DomainError("build_algebra needs k >= 1");
  CliffordFrame f;
  f.kind = FrameKind::algebra;
  f.m = m;
  f.k = k;
  f.delta = delta(m);
  f.l = k * f.delta;
  f.generators = detail::repeat_blocks(detail::irreducible_algebra(m), k);
  return f;
}

/// Clifford system P_0..P_m on R^{2l} built from the algebra for (m, k):
/// P_0 = diag(I, -I), P_1 = [[0, I], [I, 0]], P_{a+1} = [[0, E_a], [-E_a, 0]].
inline CliffordFrame build_system(int m, int k) {
  if (m < 1) throw DomainError("build_system needs m >= 1");
  if (k < 1) throw DomainError("build_system needs k >= 1");
  CliffordFrame f;
  f.kind = FrameKind::system;
  f.m = m;
  f.k = k;
  f.delta = delta(m);
  f.l = k * f.delta;
  const std::size_t l = static_cast<std::size_t>(f.l);
  const RealMatrix id = RealMatrix::identity(l);
  const RealMatrix zero(l, l);
  f.generators.push_back(block2x2(id, zero, zero, -id));
  f.generators.push_back(block2x2(zero, id, id, zero));
  for (const auto& e : detail::repeat_blocks(detail::irreducible_algebra(m), k))
    f.generators.push_back(block2x2(zero, e, -e, zero));
  return f;
}

inline CliffordFrame build_frame(FrameKind kind, int m, int k) {
  return kind == FrameKind::system ? build_system(m, k) : build_algebra(m, k);
}

struct FrameReport {
  /// anticommutator(i, j) = ||G_i G_j + G_j G_i - 2 s delta_ij I||, s = +1 (system) / -1 (algebra).
  RealMatrix anticommutator;
  double max_anticommutator = 0.0;
  /// max ||G_i -+ G_i^t|| (symmetry for systems, skewness for algebras).
  double max_structure = 0.0;
  /// max ||G_i G_i^t - I||.
  double max_orthogonality = 0.0;
  /// max |<G_i, G_j>| over i != j, and max |‖G_i‖^2 - size|.
  double max_frobenius_cross = 0.0;
  double max_norm_defect = 0.0;

  double worst() const {
    return std::max({max_anticommutator, max_structure, max_orthogonality, max_frobenius_cross, max_norm_defect});
  }
  bool ok(double tol = kStructureTolerance) const { return worst() <= tol; }
};

inline FrameReport validate_frame(const CliffordFrame& frame) {
  const std::size_t g = frame.count();
  const double sign = frame.kind == FrameKind::system ? 1.0 : -1.0;
  FrameReport rep;
  rep.anticommutator = RealMatrix(g, g);
  for (std::size_t i = 0; i < g; ++i) {
    const RealMatrix& gi = frame.generators[i];
    const std::size_t n = gi.rows();
    const RealMatrix id = RealMatrix::identity(n);
    const Structure tag = frame.kind == FrameKind::system ? Structure::symmetric : Structure::skew;
    rep.max_structure = std::max(rep.max_structure, classify(gi, tag).residual);
    rep.max_orthogonality = std::max(rep.max_orthogonality, frob_norm(matmul(gi, transpose(gi)) - id));
    rep.max_norm_defect = std::max(rep.max_norm_defect, std::abs(frob_norm2(gi) - static_cast<double>(n)));
    for (std::size_t j = i; j < g; ++j) {
      const RealMatrix& gj = frame.generators[j];
      RealMatrix ac = matmul(gi, gj) + matmul(gj, gi);
      if (i == j) ac -= (2.0 * sign) * id;
      const double r = frob_norm(ac);
      rep.anticommutator(i, j) = r;
      rep.anticommutator(j, i) = r;
      rep.max_anticommutator = std::max(rep.max_anticommutator, r);
      if (i != j) rep.max_frobenius_cross = std::max(rep.max_frobenius_cross, std::abs(frob_inner(gi, gj)));
    }
  }
  return rep;
}

/// B_r = sum_i coeffs(r, i) G_i for each row r.
inline Tuple<double> span_tuple(const CliffordFrame& frame, const RealMatrix& coeffs) {
  if (coeffs.rows() < 1) throw DimensionError("span_tuple needs at least one coefficient row");
  if (coeffs.cols() != frame.count()) {
    throw DimensionError("span_tuple: " + std::to_string(coeffs.cols()) + " coefficient columns for " +
                         std::to_string(frame.count()) + " generators");
  }
  Tuple<double> out;
  out.reserve(coeffs.rows());
  for (std::size_t r = 0; r < coeffs.rows(); ++r) {
    RealMatrix b(frame.size(), frame.size());
    for (std::size_t i = 0; i < frame.count(); ++i) {
      const double c = coeffs(r, i);
      if (c != 0.0) b += c * frame.generators[i];
    }
    out.push_back(std::move(b));
  }
  return out;
}

class OutOfSpanError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Recovers b_i^r = <G_i, B_r> / ‖G_i‖^2. Throws OutOfSpanError when some
/// B_r differs from its projection by more than tol * (1 + ‖B_r‖).
inline RealMatrix coefficient_vectors(const CliffordFrame& frame, const Tuple<double>& tuple,
                                      double tol = kStructureTolerance) {
  RealMatrix coeffs(tuple.size(), frame.count());
  const double gn2 = frame.generator_norm2();
  for (std::size_t r = 0; r < tuple.size(); ++r) {
    const RealMatrix& b = tuple[r];
    if (b.rows() != frame.size() || b.cols() != frame.size()) throw DimensionError("tuple member does not match frame size");
    RealMatrix proj(frame.size(), frame.size());
    for (std::size_t i = 0; i < frame.count(); ++i) {
      coeffs(r, i) = frob_inner(frame.generators[i], b) / gn2;
      proj += coeffs(r, i) * frame.generators[i];
    }
    const double off = frob_norm(b - proj);
    if (off > tol * (1.0 + frob_norm(b))) {
      throw OutOfSpanError("tuple member " + std::to_string(r + 1) + " leaves the frame span by " + std::to_string(off));
    }
  }
  return coeffs;
}

}  // namespace ddvv
