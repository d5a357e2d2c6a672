#pragma once

// Equality configurations, the ratio gradient, a projected-ascent search for
// the largest ratio lhs / rhs in a class, and the Erdős–Mordell reduction.

#include <array>
#include <cmath>
#include <numbers>
#include <variant>

#include "ddvv/ddvv.hpp"
#include "ddvv/parallel.hpp"
#include "ddvv/random.hpp"

namespace ddvv {

using AnyTuple = std::variant<Tuple<double>, Tuple<Complex>, Tuple<Quaternion>>;

inline ScalarKind kind_of_tuple(const AnyTuple& t) {
  return std::visit([](const auto& v) { return kind_of<typename std::decay_t<decltype(v)>::value_type::value_type>; }, t);
}

inline std::size_t tuple_length(const AnyTuple& t) {
  return std::visit([](const auto& v) { return v.size(); }, t);
}

// ---------------------------------------------------------------------------
// Canonical maximizers

class NoExtremalError : public DomainError {
 public:
  using DomainError::DomainError;
};

namespace blocks {

template <Scalar S>
Matrix<S> h1() { return Matrix<S>{{S{1.0}, S{}}, {S{}, S{-1.0}}}; }
template <Scalar S>
Matrix<S> h2() { return Matrix<S>{{S{}, S{1.0}}, {S{1.0}, S{}}}; }
/// [[0, -i], [i, 0]]
inline ComplexMatrix h3() { return ComplexMatrix{{Complex{}, Complex{0, -1}}, {Complex{0, 1}, Complex{}}}; }
/// Real companion [[0, -1], [1, 0]] of the Pauli-like triple.
inline RealMatrix j3() { return RealMatrix{{0.0, -1.0}, {1.0, 0.0}}; }

inline std::array<RealMatrix, 3> c_blocks() {
  return {RealMatrix{{0, 1, 0}, {-1, 0, 0}, {0, 0, 0}},
          RealMatrix{{0, 0, 1}, {0, 0, 0}, {-1, 0, 0}},
          RealMatrix{{0, 0, 0}, {0, 0, 1}, {0, -1, 0}}};
}

inline std::array<RealMatrix, 3> d_blocks() {
  return {RealMatrix{{0, 1, 0, 0}, {-1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, -1, 0}},
          RealMatrix{{0, 0, 1, 0}, {0, 0, 0, -1}, {-1, 0, 0, 0}, {0, 1, 0, 0}},
          RealMatrix{{0, 0, 0, 1}, {0, 0, 1, 0}, {0, -1, 0, 0}, {-1, 0, 0, 0}}};
}

template <Scalar S>
Matrix<S> lift(const RealMatrix& a) {
  Matrix<S> out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = S{a(i, j)};
  return out;
}

}  // namespace blocks

namespace detail {

template <Scalar S>
Tuple<S> pad_tuple(std::vector<Matrix<S>> head, std::size_t n, std::size_t m) {
  Tuple<S> out;
  for (std::size_t r = 0; r < m; ++r) out.push_back(r < head.size() ? pad_to(head[r], n) : Matrix<S>(n, n));
  return out;
}

}  // namespace detail

/// u q u* for a unit column vector u and quaternion q.
inline QuaternionMatrix rank_one_conjugate(const QuaternionMatrix& u, const Quaternion& q) {
  return matmul(scale_right(u, q), adjoint(u));
}

/// A tuple attaining equality for the class (lambda = 1). For quaternionic
/// classes `u` is the unit vector of B_r = u q_r u* (default e_1).
inline AnyTuple canonical_maximizer(const ConstantQuery& q, const QuaternionMatrix* u = nullptr) {
  const MatrixClass& c = q.cls;
  if (!c.valid()) throw NoExtremalError("invalid class " + c.name());
  if (q.count < 1) throw NoExtremalError("tuple length must be >= 1");
  const auto m = static_cast<std::size_t>(q.count);

  if (c.is_clifford()) {
    const FrameKind fk = c.structure == Structure::clifford_system ? FrameKind::system : FrameKind::algebra;
    const CliffordFrame frame = build_frame(fk, q.frame_m, q.frame_k);
    RealMatrix coeffs(m, frame.count());
    for (std::size_t r = 0; r < std::min(m, frame.count()); ++r) coeffs(r, r) = 1.0;
    return span_tuple(frame, coeffs);
  }

  const auto n = static_cast<std::size_t>(q.n);
  if (c.kind == ScalarKind::quaternion) {
    if (n < 1) throw NoExtremalError("quaternionic extremal needs n >= 1");
    QuaternionMatrix e1(n, 1);
    e1(0, 0) = Quaternion{1.0};
    const QuaternionMatrix& uu = u ? *u : e1;
    if (uu.rows() != n || uu.cols() != 1) throw DimensionError("u must be an n x 1 column");
    const std::array<Quaternion, 3> units{Quaternion::i(), Quaternion::j(), Quaternion::k()};
    std::vector<QuaternionMatrix> head;
    for (std::size_t r = 0; r < std::min<std::size_t>(m, 3); ++r) head.push_back(rank_one_conjugate(uu, units[r]));
    return detail::pad_tuple(std::move(head), n, m);
  }

  switch (c.structure) {
    case Structure::skew: {
      if (m < 3) throw NoExtremalError("no listed skew-symmetric extremal for m < 3");
      if (n < 3) throw NoExtremalError("no listed skew-symmetric extremal for n < 3");
      const auto bl = n == 3 ? blocks::c_blocks() : blocks::d_blocks();
      if (c.kind == ScalarKind::real) return detail::pad_tuple<double>({bl[0], bl[1], bl[2]}, n, m);
      return detail::pad_tuple<Complex>(
          {blocks::lift<Complex>(bl[0]), blocks::lift<Complex>(bl[1]), blocks::lift<Complex>(bl[2])}, n, m);
    }
    case Structure::symmetric:
      if (n < 2) throw NoExtremalError("symmetric extremal needs n >= 2");
      if (c.kind == ScalarKind::real) return detail::pad_tuple<double>({blocks::h1<double>(), blocks::h2<double>()}, n, m);
      return detail::pad_tuple<Complex>({blocks::h1<Complex>(), blocks::h2<Complex>()}, n, m);
    default:
      break;
  }

  if (n < 2) throw NoExtremalError("extremal needs n >= 2");
  if (c.kind == ScalarKind::real)
    return detail::pad_tuple<double>({blocks::h1<double>(), blocks::h2<double>(), blocks::j3()}, n, m);

  std::vector<ComplexMatrix> head{blocks::h1<Complex>(), blocks::h2<Complex>(), blocks::h3()};
  if (c.structure == Structure::skew_hermitian)
    for (auto& h : head) h = scale_left(Complex{0, 1}, h);
  return detail::pad_tuple(std::move(head), n, m);
}

// ---------------------------------------------------------------------------
// Gradients

/// Euclidean gradient of ddvv_lhs: component t is 4 sum_s [[B_t, B_s], B_s*].
template <Scalar S>
Tuple<S> lhs_gradient(const Tuple<S>& t) {
  const std::size_t n = tuple_size_n(t);
  Tuple<S> g(t.size(), Matrix<S>(n, n));
  for (std::size_t a = 0; a < t.size(); ++a) {
    for (std::size_t s = 0; s < t.size(); ++s) {
      if (s == a) continue;
      g[a] += commutator(commutator(t[a], t[s]), adjoint(t[s]));
    }
    g[a] *= 4.0;
  }
  return g;
}

class ZeroTupleError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Gradient of lhs / rhs projected onto the structure subspace. The ratio is
/// scale invariant, so the result is also tangent to the sphere through t.
template <Scalar S>
Tuple<S> ratio_gradient(const Tuple<S>& t, Structure tag) {
  const double s = tuple_norm2(t);
  if (s <= 0.0) throw ZeroTupleError("ratio gradient undefined at the zero tuple");
  const double lhs = ddvv_lhs(t);
  Tuple<S> g = lhs_gradient(t);
  for (std::size_t a = 0; a < t.size(); ++a) {
    g[a] -= (4.0 * lhs / s) * t[a];
    g[a] = project_structure(g[a] * (1.0 / (s * s)), tag);
  }
  return g;
}

/// Scale factor kappa in ratio = kappa (1 - ‖C C^t‖^2 / ‖C‖^4) for a span
/// with coefficient matrix C: 2/l for systems, 4/l for algebras.
inline double clifford_kappa(FrameKind kind, std::int64_t l) {
  return (kind == FrameKind::system ? 2.0 : 4.0) / static_cast<double>(l);
}

/// Closed-form lhs for a span tuple with coefficients C (M x g):
/// system 8l(‖C‖^4 - ‖C C^t‖^2), algebra 4l(‖C‖^4 - ‖C C^t‖^2).
inline double clifford_closed_lhs(FrameKind kind, std::int64_t l, const RealMatrix& coeffs) {
  const double s = frob_norm2(coeffs);
  const double q = frob_norm2(matmul(coeffs, transpose(coeffs)));
  return (kind == FrameKind::system ? 8.0 : 4.0) * static_cast<double>(l) * (s * s - q);
}

/// Closed-form ‖B_r‖^2 = size * sum_i (b_i^r)^2 summed over r, squared.
inline double clifford_closed_rhs(FrameKind kind, std::int64_t l, const RealMatrix& coeffs) {
  const double size = static_cast<double>(kind == FrameKind::system ? 2 * l : l);
  const double s = size * frob_norm2(coeffs);
  return s * s;
}

inline double clifford_ratio(FrameKind kind, std::int64_t l, const RealMatrix& coeffs) {
  const double s = frob_norm2(coeffs);
  if (s <= 0.0) return 0.0;
  const double q = frob_norm2(matmul(coeffs, transpose(coeffs)));
  return clifford_kappa(kind, l) * (1.0 - q / (s * s));
}

inline RealMatrix clifford_ratio_gradient(FrameKind kind, std::int64_t l, const RealMatrix& coeffs) {
  const double s = frob_norm2(coeffs);
  if (s <= 0.0) throw ZeroTupleError("ratio gradient undefined at zero coefficients");
  const RealMatrix cct = matmul(coeffs, transpose(coeffs));
  const double q = frob_norm2(cct);
  // d(q / s^2) = (4 C C^t C) / s^2 - (4 q / s^3) C
  RealMatrix g = matmul(cct, coeffs) * (4.0 / (s * s)) - coeffs * (4.0 * q / (s * s * s));
  return g * (-clifford_kappa(kind, l));
}

// ---------------------------------------------------------------------------
// Search

struct SearchConfig {
  ConstantQuery query;
  int restarts = 64;
  int max_iters = 500;
  double step = 0.5;
  double tol = 1e-10;
  std::uint64_t seed = 0;

  void validate() const {
    if (restarts < 1) throw DomainError("restarts must be >= 1");
    if (max_iters < 1) throw DomainError("max_iters must be >= 1");
    if (!(step > 0.0)) throw DomainError("step must be > 0");
    if (!query.cls.valid()) throw DomainError("invalid class " + query.cls.name());
    if (query.count < 1) throw DomainError("tuple length must be >= 1");
    if (!query.cls.is_clifford() && query.n < 1) throw DomainError("n must be >= 1");
  }
};

struct RestartTrace {
  std::size_t iterations = 0;
  double final_gradient_norm = 0.0;
  double ratio = 0.0;
};

struct SearchResult {
  double best_ratio = 0.0;
  AnyTuple best_tuple;
  std::size_t best_restart = 0;
  std::vector<RestartTrace> trace;
  std::uint64_t seed = 0;
};

namespace detail {

struct AscentState {
  double value = 0.0;
  std::size_t iterations = 0;
  double gradient_norm = 0.0;
};

/// Projected ascent on the unit sphere. The trial step is the Barzilai-Borwein
/// length from the previous move; it is halved until the Armijo condition
/// holds. `point` stays normalised.
template <class Point, class Value, class Grad, class Norm2, class Inner, class Axpy>
AscentState ascend(Point& point, const SearchConfig& cfg, Value value, Grad grad, Norm2 norm2, Inner inner, Axpy axpy) {
  constexpr double kArmijo = 1e-4;
  constexpr double kMaxStep = 1e3;
  AscentState st;
  st.value = value(point);
  Point g = grad(point);
  double step = cfg.step;
  for (st.iterations = 0; st.iterations < static_cast<std::size_t>(cfg.max_iters); ++st.iterations) {
    const double g2 = norm2(g);
    st.gradient_norm = std::sqrt(g2);
    if (st.gradient_norm < cfg.tol) break;
    bool moved = false;
    for (; step > 1e-16; step *= 0.5) {
      Point trial = axpy(point, step, g);
      trial = axpy(trial, 1.0 / std::sqrt(norm2(trial)) - 1.0, trial);
      const double v = value(trial);
      if (v < st.value + kArmijo * step * g2 && !(step < 1e-8 && v > st.value)) continue;
      Point next_g = grad(trial);
      const Point s = axpy(trial, -1.0, point);
      const Point y = axpy(next_g, -1.0, g);
      const double sy = inner(s, y);
      // ascent: along a concave stretch s.y < 0
      step = sy < 0.0 ? std::min(inner(s, s) / -sy, kMaxStep) : std::min(2.0 * step, kMaxStep);
      point = std::move(trial);
      g = std::move(next_g);
      st.value = v;
      moved = true;
      break;
    }
    if (!moved) break;
  }
  return st;
}

template <Scalar S>
std::pair<Tuple<S>, AscentState> search_restart(const SearchConfig& cfg, std::uint64_t stream_seed) {
  Rng rng(stream_seed);
  const auto n = static_cast<std::size_t>(cfg.query.n);
  const auto m = static_cast<std::size_t>(cfg.query.count);
  const Structure tag = cfg.query.cls.structure;
  Tuple<S> point = random_tuple<S>(rng, n, m, tag);
  while (tuple_norm2(point) <= 0.0) point = random_tuple<S>(rng, n, m, tag);
  point = scaled(point, 1.0 / std::sqrt(tuple_norm2(point)));
  const auto value = [](const Tuple<S>& t) {
    const double s = tuple_norm2(t);
    return s > 0 ? ddvv_lhs(t) / (s * s) : 0.0;
  };
  const auto grad = [tag](const Tuple<S>& t) { return ratio_gradient(t, tag); };
  const auto norm2 = [](const Tuple<S>& t) { return tuple_norm2(t); };
  const auto inner = [](const Tuple<S>& a, const Tuple<S>& b) { return tuple_inner(a, b); };
  const auto axpy = [](const Tuple<S>& x, double a, const Tuple<S>& y) {
    Tuple<S> out = x;
    for (std::size_t r = 0; r < out.size(); ++r) out[r] += a * y[r];
    return out;
  };
  AscentState st = ascend(point, cfg, value, grad, norm2, inner, axpy);
  return {std::move(point), st};
}

inline std::pair<RealMatrix, AscentState> search_restart_clifford(const SearchConfig& cfg, FrameKind kind,
                                                                  std::int64_t l, std::size_t gens,
                                                                  std::uint64_t stream_seed) {
  Rng rng(stream_seed);
  const auto m = static_cast<std::size_t>(cfg.query.count);
  RealMatrix point = gaussian_matrix<double>(rng, m, gens);
  while (frob_norm2(point) <= 0.0) point = gaussian_matrix<double>(rng, m, gens);
  point *= 1.0 / frob_norm(point);
  const auto value = [kind, l](const RealMatrix& c) { return clifford_ratio(kind, l, c); };
  const auto grad = [kind, l](const RealMatrix& c) { return clifford_ratio_gradient(kind, l, c); };
  const auto norm2 = [](const RealMatrix& c) { return frob_norm2(c); };
  const auto inner = [](const RealMatrix& a, const RealMatrix& b) { return frob_inner(a, b); };
  const auto axpy = [](const RealMatrix& x, double a, const RealMatrix& y) { return x + a * y; };
  AscentState st = ascend(point, cfg, value, grad, norm2, inner, axpy);
  return {std::move(point), st};
}

template <Scalar S>
SearchResult search_matrix_class(const SearchConfig& cfg, unsigned workers) {
  const auto restarts = static_cast<std::size_t>(cfg.restarts);
  std::vector<Tuple<S>> points(restarts);
  std::vector<RestartTrace> trace(restarts);
  parallel_for(restarts, workers, [&](std::size_t r) {
    auto [pt, st] = search_restart<S>(cfg, derive_seed(cfg.seed, r));
    points[r] = std::move(pt);
    trace[r] = {st.iterations, st.gradient_norm, st.value};
  });
  std::size_t best = 0;
  for (std::size_t r = 1; r < restarts; ++r)
    if (trace[r].ratio > trace[best].ratio) best = r;
  return {trace[best].ratio, std::move(points[best]), best, std::move(trace), cfg.seed};
}

}  // namespace detail

/// Maximises lhs / rhs over the class on the unit sphere sum ‖B_r‖^2 = 1.
/// Restart r draws from stream derive_seed(seed, r); the best restart wins,
/// ties going to the lower index. Clifford spans are searched in coefficient
/// space with the closed forms.
inline SearchResult search_max_ratio(const SearchConfig& cfg, unsigned workers = worker_count()) {
  cfg.validate();
  const MatrixClass& c = cfg.query.cls;
  if (c.is_clifford()) {
    const FrameKind fk = c.structure == Structure::clifford_system ? FrameKind::system : FrameKind::algebra;
    const CliffordFrame frame = build_frame(fk, cfg.query.frame_m, cfg.query.frame_k);
    const auto restarts = static_cast<std::size_t>(cfg.restarts);
    std::vector<RealMatrix> points(restarts);
    std::vector<RestartTrace> trace(restarts);
    parallel_for(restarts, workers, [&](std::size_t r) {
      auto [pt, st] = detail::search_restart_clifford(cfg, fk, frame.l, frame.count(), derive_seed(cfg.seed, r));
      points[r] = std::move(pt);
      trace[r] = {st.iterations, st.gradient_norm, st.value};
    });
    std::size_t best = 0;
    for (std::size_t r = 1; r < restarts; ++r)
      if (trace[r].ratio > trace[best].ratio) best = r;
    return {trace[best].ratio, span_tuple(frame, points[best]), best, std::move(trace), cfg.seed};
  }
  switch (c.kind) {
    case ScalarKind::real: return detail::search_matrix_class<double>(cfg, workers);
    case ScalarKind::complex: return detail::search_matrix_class<Complex>(cfg, workers);
    case ScalarKind::quaternion: return detail::search_matrix_class<Quaternion>(cfg, workers);
  }
  throw DomainError("unreachable scalar kind");
}

// ---------------------------------------------------------------------------
// Erdős–Mordell

struct Point2 {
  double x = 0.0;
  double y = 0.0;
};

struct EmReport {
  double pa = 0.0, pb = 0.0, pc = 0.0;
  /// Distances from P to the lines BC, CA, AB.
  double da = 0.0, db = 0.0, dc = 0.0;
  double em_lhs = 0.0;  // 2 (da + db + dc)
  double em_rhs = 0.0;  // PA + PB + PC
  /// alpha_1 + alpha_2 + alpha_3 = pi; the angle between PA and PB is
  /// pi/2 + alpha_3/2, PA and PC pi/2 + alpha_2/2, PB and PC pi/2 + alpha_1/2.
  std::array<double, 3> alpha{};
  Tuple<double> x;  // X_1, X_2, X_3 in V
  double ddvv_lhs = 0.0;
  double ddvv_rhs = 0.0;
  double ddvv_slack = 0.0;  // rhs / 4 - lhs
  double angle_error = 0.0;
};

/// hat(v) / sqrt(2): the isometry R^3 -> o(3) scaled so ‖X‖ = |v|.
inline RealMatrix so3_from_vector(double v1, double v2, double v3) {
  const double s = 1.0 / std::numbers::sqrt2;
  return RealMatrix{{0.0, -v3 * s, v2 * s}, {v3 * s, 0.0, -v1 * s}, {-v2 * s, v1 * s, 0.0}};
}

inline EmReport erdos_mordell_demo(const std::array<Point2, 3>& tri, const Point2& p) {
  const auto cross = [](Point2 a, Point2 b, Point2 c) { return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x); };
  const auto dist = [](Point2 a, Point2 b) { return std::hypot(a.x - b.x, a.y - b.y); };
  const auto& [a, b, c] = tri;
  const double area2 = cross(a, b, c);
  if (area2 == 0.0) throw DomainError("degenerate triangle");
  const double wa = cross(p, b, c) / area2;
  const double wb = cross(a, p, c) / area2;
  const double wc = cross(a, b, p) / area2;
  const double edge = 1e-12;
  if (wa <= edge || wb <= edge || wc <= edge) throw DomainError("P must lie strictly inside the triangle");

  EmReport r;
  r.pa = dist(p, a);
  r.pb = dist(p, b);
  r.pc = dist(p, c);
  r.da = std::abs(cross(b, c, p)) / dist(b, c);
  r.db = std::abs(cross(c, a, p)) / dist(c, a);
  r.dc = std::abs(cross(a, b, p)) / dist(a, b);
  r.em_lhs = 2.0 * (r.da + r.db + r.dc);
  r.em_rhs = r.pa + r.pb + r.pc;

  const std::array<Point2, 3> v{Point2{a.x - p.x, a.y - p.y}, Point2{b.x - p.x, b.y - p.y}, Point2{c.x - p.x, c.y - p.y}};
  const auto angle = [](Point2 u, Point2 w) {
    return std::abs(std::atan2(u.x * w.y - u.y * w.x, u.x * w.x + u.y * w.y));
  };
  r.alpha[2] = 2.0 * angle(v[0], v[1]) - std::numbers::pi;
  r.alpha[1] = 2.0 * angle(v[0], v[2]) - std::numbers::pi;
  r.alpha[0] = 2.0 * angle(v[1], v[2]) - std::numbers::pi;

  for (const auto& w : v) r.x.push_back(so3_from_vector(w.x, w.y, 0.0));
  r.ddvv_lhs = ddvv_lhs(r.x);
  r.ddvv_rhs = ddvv_rhs(r.x);
  r.ddvv_slack = 0.25 * r.ddvv_rhs - r.ddvv_lhs;

  const std::array<std::pair<std::size_t, std::size_t>, 3> pairs{{{1, 2}, {0, 2}, {0, 1}}};
  for (std::size_t i = 0; i < 3; ++i) {
    const auto [s, t] = pairs[i];
    const double cosang = frob_inner(r.x[s], r.x[t]) / (frob_norm(r.x[s]) * frob_norm(r.x[t]));
    const double got = std::acos(std::clamp(cosang, -1.0, 1.0));
    r.angle_error = std::max(r.angle_error, std::abs(got - (std::numbers::pi / 2 + r.alpha[i] / 2)));
  }
  return r;
}

/// Random triangle with Gaussian vertices (non-degenerate) and a uniform interior point.
inline std::pair<std::array<Point2, 3>, Point2> random_em_instance(Rng& rng) {
  std::normal_distribution<double> nd;
  std::uniform_real_distribution<double> ud(0.0, 1.0);
  for (;;) {
    std::array<Point2, 3> t{Point2{nd(rng), nd(rng)}, Point2{nd(rng), nd(rng)}, Point2{nd(rng), nd(rng)}};
    const double area2 = std::abs((t[1].x - t[0].x) * (t[2].y - t[0].y) - (t[1].y - t[0].y) * (t[2].x - t[0].x));
    double longest = 0.0;
    for (int i = 0; i < 3; ++i) {
      const auto& u = t[static_cast<std::size_t>(i)];
      const auto& w = t[static_cast<std::size_t>((i + 1) % 3)];
      longest = std::max(longest, std::hypot(u.x - w.x, u.y - w.y));
    }
    if (area2 < 1e-3 * longest * longest) continue;
    double s1 = ud(rng), s2 = ud(rng);
    if (s1 > s2) std::swap(s1, s2);
    const double w0 = s1, w1 = s2 - s1, w2 = 1.0 - s2;
    if (std::min({w0, w1, w2}) < 1e-6) continue;
    const Point2 p{w0 * t[0].x + w1 * t[1].x + w2 * t[2].x, w0 * t[0].y + w1 * t[1].y + w2 * t[2].y};
    return {t, p};
  }
}

}  // namespace ddvv
