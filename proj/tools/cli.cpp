#include "cli.hpp"

#include <openssl/evp.h>

#include <CLI11.hpp>
#include <algorithm>
#include <charconv>
#include <cstdio>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>
#include <vector>

#include "ddvv/extremal.hpp"
#include "ddvv/tables.hpp"
#include "ddvv/tuple_io.hpp"

namespace ddvv::cli {

std::string git_blob_sha1(std::string_view content) {
  const std::string header = "blob " + std::to_string(content.size()) + std::string(1, '\0');
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(), EVP_MD_CTX_free);
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha1(), nullptr) != 1 ||
      EVP_DigestUpdate(ctx.get(), header.data(), header.size()) != 1 ||
      EVP_DigestUpdate(ctx.get(), content.data(), content.size()) != 1 ||
      EVP_DigestFinal_ex(ctx.get(), digest, &len) != 1)
    throw std::runtime_error("SHA-1 digest failed");
  std::string hex;
  char buf[3];
  for (unsigned int i = 0; i < len; ++i) {
    std::snprintf(buf, sizeof buf, "%02x", digest[i]);
    hex += buf;
  }
  return hex;
}

namespace {

using ojson = nlohmann::ordered_json;

// Shortest text that reads back to the same double.
std::string num(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string decimal12(const Rational& r) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12f", r.value());
  return buf;
}

std::string constant_text(const Rational& c) { return c.str() + " (" + decimal12(c) + ")"; }

struct Invocation {
  std::string echo;  // argv[1..] joined
  std::ostream& out;
};

void write_manifest(const std::string& path, const ojson& manifest) { write_file(path, manifest.dump(1) + "\n"); }

ojson manifest_head(const Invocation& inv, const std::string& command) {
  ojson j;
  j["tool"] = "ddvv-lab";
  j["command"] = command;
  j["argv"] = inv.echo;
  return j;
}

// ---------------------------------------------------------------------------
// Class queries from flags

struct QueryFlags {
  std::string cls;
  int n = 3;
  int m = 3;
  int big_m = 0;
  int k = 1;
  int cm = 0;
};

FrameKind frame_kind(const MatrixClass& c) {
  return c.structure == Structure::clifford_system ? FrameKind::system : FrameKind::algebra;
}

ConstantQuery make_query(const QueryFlags& f) {
  if (f.cls.empty()) throw UsageError("--class is required");
  MatrixClass c;
  try {
    c = MatrixClass::parse(f.cls);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
  if (!c.valid()) throw UsageError("unsupported class " + f.cls);
  ConstantQuery q{c, f.n, f.m};
  if (c.is_clifford()) {
    const FrameKind fk = frame_kind(c);
    const int min_m = fk == FrameKind::system ? 1 : 2;
    if (f.cm < min_m) throw UsageError("--cm must be >= " + std::to_string(min_m) + " for " + c.name());
    if (f.k < 1) throw UsageError("--k must be >= 1");
    q.frame_m = f.cm;
    q.frame_k = f.k;
    const std::int64_t l = f.k * delta(f.cm);
    q.n = static_cast<int>(fk == FrameKind::system ? 2 * l : l);
    const int gens = fk == FrameKind::system ? f.cm + 1 : f.cm - 1;
    q.count = f.big_m > 0 ? f.big_m : std::max(gens, 1);
  } else {
    if (f.n < 1) throw UsageError("--n must be >= 1");
    if (f.m < 1) throw UsageError("--m must be >= 1");
  }
  try {
    optimal_constant(q);
  } catch (const UnderSpecifiedQuery& e) {
    throw UsageError(e.what());
  }
  return q;
}

ojson query_json(const ConstantQuery& q) {
  ojson j;
  j["class"] = q.cls.name();
  j["n"] = q.n;
  j["count"] = q.count;
  if (q.cls.is_clifford()) j["clifford"] = {{"k", q.frame_k}, {"m", q.frame_m}};
  return j;
}

void print_query(std::ostream& out, const ConstantQuery& q) {
  out << "class: " << q.cls.name() << "\n";
  out << "n: " << q.n << "\n";
  out << "count: " << q.count << "\n";
  if (q.cls.is_clifford()) out << "clifford: m=" << q.frame_m << " k=" << q.frame_k << "\n";
  out << "constant: " << constant_text(optimal_constant(q)) << "\n";
}

AnyTuple sample_tuple(const ConstantQuery& q, const CliffordFrame* frame, Rng& rng) {
  const auto count = static_cast<std::size_t>(q.count);
  if (frame) return span_tuple(*frame, gaussian_matrix<double>(rng, count, frame->count()));
  const auto n = static_cast<std::size_t>(q.n);
  switch (q.cls.kind) {
    case ScalarKind::real: return random_tuple<double>(rng, n, count, q.cls.structure);
    case ScalarKind::complex: return random_tuple<Complex>(rng, n, count, q.cls.structure);
    case ScalarKind::quaternion: return random_tuple<Quaternion>(rng, n, count, q.cls.structure);
  }
  throw DomainError("unreachable scalar kind");
}

std::pair<double, double> sides(const AnyTuple& t) {
  return std::visit([](const auto& v) { return std::pair{ddvv_lhs(v), ddvv_rhs(v)}; }, t);
}

DdvvReport evaluate_any(const AnyTuple& t, const ConstantQuery& q) {
  return std::visit([&](const auto& v) { return evaluate(v, q); }, t);
}

// ---------------------------------------------------------------------------
// verify

struct VerifyFlags {
  QueryFlags query;
  long long samples = 1000;
  std::uint64_t seed = 0;
  double tol = 1e-9;
  std::string in;
  std::string out;
};

int cmd_verify(const Invocation& inv, const VerifyFlags& f) {
  std::ostream& out = inv.out;
  ojson manifest = manifest_head(inv, "verify");
  manifest["tolerance"] = f.tol;
  int code = kOk;

  if (!f.in.empty()) {
    const std::string text = read_file(f.in);
    const TupleRecord rec = read_tuple(text);
    const DdvvReport rep = evaluate_any(rec.matrices, rec.query);
    const bool violated = rep.slack < -f.tol * rep.rhs;
    print_query(out, rec.query);
    out << "lhs: " << num(rep.lhs) << "\n";
    out << "rhs: " << num(rep.rhs) << "\n";
    out << "ratio: " << num(rep.ratio) << "\n";
    out << "slack: " << num(rep.slack) << "\n";
    out << "verdict: " << (violated ? "VIOLATION" : "ok") << "\n";
    manifest["input"] = f.in;
    manifest["input_hash"] = git_blob_sha1(text);
    manifest["query"] = query_json(rec.query);
    manifest["results"] = {{"lhs", rep.lhs}, {"rhs", rep.rhs}, {"ratio", rep.ratio}, {"constant", rep.constant.str()},
                           {"slack", rep.slack}, {"violation", violated}};
    code = violated ? kViolation : kOk;
  } else {
    if (f.samples < 1) throw UsageError("--samples must be >= 1");
    const ConstantQuery q = make_query(f.query);
    const Rational c = optimal_constant(q);
    std::optional<CliffordFrame> frame;
    if (q.cls.is_clifford()) frame = build_frame(frame_kind(q.cls), q.frame_m, q.frame_k);

    const auto samples = static_cast<std::size_t>(f.samples);
    std::vector<double> ratio(samples);
    std::vector<double> rel_slack(samples);
    parallel_for(samples, worker_count(), [&](std::size_t i) {
      Rng rng(derive_seed(f.seed, i));
      const auto [lhs, rhs] = sides(sample_tuple(q, frame ? &*frame : nullptr, rng));
      ratio[i] = rhs > 0 ? lhs / rhs : 0.0;
      rel_slack[i] = rhs > 0 ? exact_slack(c, lhs, rhs) / rhs : 0.0;
    });
    std::size_t worst = 0;
    std::size_t violations = 0;
    for (std::size_t i = 0; i < samples; ++i) {
      if (rel_slack[i] < rel_slack[worst]) worst = i;
      if (rel_slack[i] < -f.tol) ++violations;
    }
    const double max_ratio = *std::max_element(ratio.begin(), ratio.end());

    print_query(out, q);
    out << "samples: " << samples << "\n";
    out << "seed: " << f.seed << "\n";
    out << "max_ratio: " << num(max_ratio) << "\n";
    out << "min_relative_slack: " << num(rel_slack[worst]) << " (sample " << worst << ")\n";
    out << "violations: " << violations << "\n";
    out << "verdict: " << (violations ? "VIOLATION" : "ok") << "\n";
    manifest["seed"] = f.seed;
    manifest["samples"] = samples;
    manifest["query"] = query_json(q);
    manifest["input_hash"] = git_blob_sha1(inv.echo);
    manifest["results"] = {{"constant", c.str()},
                           {"max_ratio", max_ratio},
                           {"min_relative_slack", rel_slack[worst]},
                           {"worst_sample", worst},
                           {"violations", violations}};
    code = violations ? kViolation : kOk;
  }
  if (!f.out.empty()) write_manifest(f.out, manifest);
  return code;
}

// ---------------------------------------------------------------------------
// search

struct SearchFlags {
  QueryFlags query;
  int restarts = 64;
  int iters = 500;
  std::uint64_t seed = 0;
  double tol = 1e-9;
  std::string out;
};

int cmd_search(const Invocation& inv, const SearchFlags& f) {
  std::ostream& out = inv.out;
  SearchConfig cfg;
  cfg.query = make_query(f.query);
  cfg.restarts = f.restarts;
  cfg.max_iters = f.iters;
  cfg.seed = f.seed;
  try {
    cfg.validate();
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
  const Rational c = optimal_constant(cfg.query);
  SearchResult res = search_max_ratio(cfg);
  const double gap = c.value() - res.best_ratio;
  const bool violated = res.best_ratio > c.value() * (1.0 + f.tol);

  print_query(out, cfg.query);
  out << "restarts: " << cfg.restarts << "\n";
  out << "iterations: " << cfg.max_iters << "\n";
  out << "seed: " << cfg.seed << "\n";
  out << "best_ratio: " << num(res.best_ratio) << "\n";
  out << "gap: " << num(gap) << "\n";
  out << "best_restart: " << res.best_restart << "\n";
  if (violated) out << "verdict: VIOLATION\n";

  if (!f.out.empty()) {
    const std::string tuple_text = write_tuple(make_record(cfg.query, std::move(res.best_tuple)));
    write_file(f.out, tuple_text);
    ojson manifest = manifest_head(inv, "search");
    manifest["seed"] = cfg.seed;
    manifest["restarts"] = cfg.restarts;
    manifest["iterations"] = cfg.max_iters;
    manifest["step"] = cfg.step;
    manifest["tolerance"] = cfg.tol;
    manifest["query"] = query_json(cfg.query);
    manifest["input_hash"] = git_blob_sha1(inv.echo);
    manifest["output"] = f.out;
    manifest["output_hash"] = git_blob_sha1(tuple_text);
    ojson restarts = ojson::array();
    for (const auto& t : res.trace)
      restarts.push_back({{"ratio", t.ratio}, {"iterations", t.iterations}, {"gradient_norm", t.final_gradient_norm}});
    manifest["results"] = {{"constant", c.str()},
                           {"best_ratio", res.best_ratio},
                           {"gap", gap},
                           {"best_restart", res.best_restart},
                           {"restarts", std::move(restarts)}};
    write_manifest(f.out + ".manifest.json", manifest);
  }
  return violated ? kViolation : kOk;
}

// ---------------------------------------------------------------------------
// tables

int cmd_tables(const Invocation& inv, const std::string& format, const std::string& path) {
  const std::string text = render_tables(format);
  if (path.empty())
    inv.out << text;
  else
    write_file(path, text);
  return kOk;
}

// ---------------------------------------------------------------------------
// embed

struct EmbedFlags {
  std::string in;
  std::string out;
  std::string kind;
};

template <Scalar S, Scalar T, class Embed, class CommResidual>
ojson embed_tuple(const Tuple<S>& t, Embed embed, CommResidual comm_residual, Tuple<T>& dest) {
  double norm_res = 0.0;
  double comm_res = 0.0;
  for (const auto& b : t) {
    dest.push_back(embed(b));
    norm_res = std::max(norm_res, std::abs(frob_norm2(dest.back()) - 2.0 * frob_norm2(b)) / (1.0 + frob_norm2(b)));
  }
  for (std::size_t r = 0; r < t.size(); ++r)
    for (std::size_t s = r + 1; s < t.size(); ++s)
      comm_res = std::max(comm_res, comm_residual(t[r], t[s]) / (1.0 + frob_norm(t[r]) * frob_norm(t[s])));
  const double lhs_in = ddvv_lhs(t);
  const double lhs_out = ddvv_lhs(dest);
  ojson j;
  j["norm_identity_residual"] = norm_res;
  j["commutator_identity_residual"] = comm_res;
  j["lhs_in"] = lhs_in;
  j["lhs_out"] = lhs_out;
  j["lhs_factor"] = lhs_in > 0 ? lhs_out / lhs_in : 0.0;
  return j;
}

int cmd_embed(const Invocation& inv, const EmbedFlags& f) {
  std::ostream& out = inv.out;
  if (f.kind != "phi" && f.kind != "psi") throw UsageError("--kind must be phi or psi");
  const std::string text = read_file(f.in);
  const TupleRecord rec = read_tuple(text);
  const MatrixClass& in_cls = rec.query.cls;

  ConstantQuery oq;
  AnyTuple result;
  ojson residuals;
  if (f.kind == "phi") {
    if (in_cls.kind != ScalarKind::complex)
      throw DataError("phi embeds complex matrices; input is " + std::string(to_string(in_cls.kind)));
    Structure s = Structure::general;
    if (in_cls.structure == Structure::hermitian) s = Structure::skew;
    if (in_cls.structure == Structure::skew_hermitian) s = Structure::symmetric;
    oq.cls = {ScalarKind::real, s};
    Tuple<double> dest;
    residuals = embed_tuple(std::get<Tuple<Complex>>(rec.matrices), [](const ComplexMatrix& x) { return phi_embed(x); },
                            phi_commutator_identity_residual, dest);
    result = std::move(dest);
  } else {
    if (in_cls.kind != ScalarKind::quaternion)
      throw DataError("psi embeds quaternionic matrices; input is " + std::string(to_string(in_cls.kind)));
    const Structure s = in_cls.structure == Structure::skew_hermitian ? Structure::skew_hermitian : Structure::general;
    oq.cls = {ScalarKind::complex, s};
    Tuple<Complex> dest;
    residuals = embed_tuple(std::get<Tuple<Quaternion>>(rec.matrices),
                            [](const QuaternionMatrix& x) { return psi_embed(x); }, psi_commutator_identity_residual, dest);
    result = std::move(dest);
  }
  const TupleRecord out_rec = make_record(oq, std::move(result));
  const std::string out_text = write_tuple(out_rec);
  write_file(f.out, out_text);

  out << "embedding: " << f.kind << "\n";
  out << "input: " << in_cls.name() << " n=" << rec.query.n << " count=" << rec.query.count << "\n";
  out << "output: " << out_rec.query.cls.name() << " n=" << out_rec.query.n << " count=" << out_rec.query.count << "\n";
  for (const auto& [key, value] : residuals.items()) out << key << ": " << num(value.get<double>()) << "\n";

  ojson manifest = manifest_head(inv, "embed");
  manifest["kind"] = f.kind;
  manifest["input"] = f.in;
  manifest["input_hash"] = git_blob_sha1(text);
  manifest["output"] = f.out;
  manifest["output_hash"] = git_blob_sha1(out_text);
  manifest["results"] = residuals;
  write_manifest(f.out + ".manifest.json", manifest);
  return kOk;
}

// ---------------------------------------------------------------------------
// clifford

struct CliffordFlags {
  int m = 0;
  int k = 1;
  std::string kind = "system";
  std::string out;
};

int cmd_clifford(const Invocation& inv, const CliffordFlags& f) {
  std::ostream& out = inv.out;
  if (f.kind != "system" && f.kind != "algebra") throw UsageError("--kind must be system or algebra");
  const FrameKind fk = f.kind == "system" ? FrameKind::system : FrameKind::algebra;
  if (f.m < (fk == FrameKind::system ? 1 : 2)) throw UsageError("--m out of range for a Clifford " + f.kind);
  if (f.k < 1) throw UsageError("--k must be >= 1");
  const CliffordFrame frame = build_frame(fk, f.m, f.k);
  const FrameReport rep = validate_frame(frame);

  out << "frame: " << to_string(fk) << " m=" << f.m << " k=" << f.k << "\n";
  out << "delta: " << frame.delta << "\n";
  out << "l: " << frame.l << "\n";
  out << "size: " << frame.size() << "\n";
  out << "generators: " << frame.count() << "\n";
  out << "max_anticommutator: " << num(rep.max_anticommutator) << "\n";
  out << "max_structure: " << num(rep.max_structure) << "\n";
  out << "max_orthogonality: " << num(rep.max_orthogonality) << "\n";
  out << "max_frobenius_cross: " << num(rep.max_frobenius_cross) << "\n";
  out << "max_norm_defect: " << num(rep.max_norm_defect) << "\n";
  out << "verdict: " << (rep.ok() ? "valid" : "INVALID") << "\n";

  if (!f.out.empty()) {
    ConstantQuery q;
    q.cls = {ScalarKind::real, frame.structure()};
    q.frame_m = f.m;
    q.frame_k = f.k;
    const std::string text = write_tuple(make_record(q, frame.generators));
    write_file(f.out, text);
    ojson manifest = manifest_head(inv, "clifford");
    manifest["output"] = f.out;
    manifest["output_hash"] = git_blob_sha1(text);
    manifest["results"] = {{"delta", frame.delta},
                           {"l", frame.l},
                           {"size", frame.size()},
                           {"generators", frame.count()},
                           {"max_anticommutator", rep.max_anticommutator},
                           {"max_structure", rep.max_structure},
                           {"max_orthogonality", rep.max_orthogonality},
                           {"max_frobenius_cross", rep.max_frobenius_cross},
                           {"max_norm_defect", rep.max_norm_defect}};
    write_manifest(f.out + ".manifest.json", manifest);
  }
  return rep.ok() ? kOk : kViolation;
}

// ---------------------------------------------------------------------------
// check-equality

int cmd_check_equality(const Invocation& inv, const std::string& in, double tol, const std::string& path) {
  std::ostream& out = inv.out;
  const std::string text = read_file(in);
  const TupleRecord rec = read_tuple(text);
  const DdvvReport rep = evaluate_any(rec.matrices, rec.query);
  const double rel = rep.rhs > 0 ? rep.slack / rep.rhs : 0.0;
  const bool violated = rel < -tol;
  const bool equal = !violated && rel <= tol && worst_condition(rep.equality_residuals) <= tol;

  print_query(out, rec.query);
  out << "lhs: " << num(rep.lhs) << "\n";
  out << "rhs: " << num(rep.rhs) << "\n";
  out << "ratio: " << num(rep.ratio) << "\n";
  for (const auto& [name, value] : rep.equality_residuals) out << name << ": " << num(value) << "\n";
  const char* verdict = violated ? "VIOLATION" : equal ? "equality within tol" : "strict";
  out << "verdict: " << verdict << "\n";

  if (!path.empty()) {
    ojson manifest = manifest_head(inv, "check-equality");
    manifest["tolerance"] = tol;
    manifest["input"] = in;
    manifest["input_hash"] = git_blob_sha1(text);
    manifest["query"] = query_json(rec.query);
    ojson residuals;
    for (const auto& [name, value] : rep.equality_residuals) residuals[name] = value;
    manifest["results"] = {{"lhs", rep.lhs},     {"rhs", rep.rhs},         {"ratio", rep.ratio},
                           {"constant", rep.constant.str()}, {"residuals", residuals}, {"verdict", verdict}};
    write_manifest(path, manifest);
  }
  return violated ? kViolation : kOk;
}

// ---------------------------------------------------------------------------
// em

int cmd_em(const Invocation& inv, long long samples_flag, std::uint64_t seed, double tol, const std::string& path) {
  std::ostream& out = inv.out;
  if (samples_flag < 1) throw UsageError("--samples must be >= 1");
  const auto samples = static_cast<std::size_t>(samples_flag);
  std::vector<EmReport> reps(samples);
  parallel_for(samples, worker_count(), [&](std::size_t i) {
    Rng rng(derive_seed(seed, i));
    const auto [tri, p] = random_em_instance(rng);
    reps[i] = erdos_mordell_demo(tri, p);
  });
  double min_em = 0.0, min_ddvv = 0.0, max_angle = 0.0;
  std::size_t violations = 0;
  for (std::size_t i = 0; i < samples; ++i) {
    const double em = (reps[i].em_rhs - reps[i].em_lhs) / reps[i].em_rhs;
    const double dd = reps[i].ddvv_slack / reps[i].ddvv_rhs;
    min_em = i == 0 ? em : std::min(min_em, em);
    min_ddvv = i == 0 ? dd : std::min(min_ddvv, dd);
    max_angle = std::max(max_angle, reps[i].angle_error);
    if (em < -tol || dd < -tol) ++violations;
  }
  const double h = std::sqrt(3.0) / 2.0;
  const EmReport eq = erdos_mordell_demo({Point2{0, 0}, Point2{1, 0}, Point2{0.5, h}}, Point2{0.5, h / 3.0});
  const double eq_em = (eq.em_rhs - eq.em_lhs) / eq.em_rhs;
  const double eq_ddvv = eq.ddvv_slack / eq.ddvv_rhs;

  out << "samples: " << samples << "\n";
  out << "seed: " << seed << "\n";
  out << "min_relative_em_slack: " << num(min_em) << "\n";
  out << "min_relative_ddvv_slack: " << num(min_ddvv) << "\n";
  out << "max_angle_error: " << num(max_angle) << "\n";
  out << "equilateral_centroid_em_slack: " << num(eq_em) << "\n";
  out << "equilateral_centroid_ddvv_slack: " << num(eq_ddvv) << "\n";
  out << "violations: " << violations << "\n";
  out << "verdict: " << (violations ? "VIOLATION" : "ok") << "\n";

  if (!path.empty()) {
    ojson manifest = manifest_head(inv, "em");
    manifest["seed"] = seed;
    manifest["samples"] = samples;
    manifest["tolerance"] = tol;
    manifest["input_hash"] = git_blob_sha1(inv.echo);
    manifest["results"] = {{"min_relative_em_slack", min_em},
                           {"min_relative_ddvv_slack", min_ddvv},
                           {"max_angle_error", max_angle},
                           {"equilateral_centroid_em_slack", eq_em},
                           {"equilateral_centroid_ddvv_slack", eq_ddvv},
                           {"violations", violations}};
    write_manifest(path, manifest);
  }
  return violations ? kViolation : kOk;
}

void add_query_flags(CLI::App* sub, QueryFlags& q) {
  sub->add_option("--class", q.cls, "matrix class, e.g. complex-hermitian");
  sub->add_option("--n", q.n, "matrix size")->capture_default_str();
  sub->add_option("--m", q.m, "tuple length")->capture_default_str();
  sub->add_option("--M", q.big_m, "tuple length for Clifford spans (default: generator count)");
  sub->add_option("--k", q.k, "Clifford multiplicity")->capture_default_str();
  sub->add_option("--cm", q.cm, "Clifford m");
}

}  // namespace

std::string render_tables(std::string_view format) {
  if (format != "text" && format != "csv") throw UsageError("--format must be text or csv");
  const std::vector<TableCell> cells = constant_tables();
  std::ostringstream os;

  if (format == "csv") {
    os << "table,row,column,fraction,decimal\n";
    for (const auto& c : cells) {
      os << c.table << ',' << c.row << ',' << c.column << ',';
      if (c.value)
        os << c.value->str() << ',' << decimal12(*c.value);
      else
        os << "--,";
      os << '\n';
    }
    return os.str();
  }

  static const std::vector<std::pair<std::string, std::string>> titles{
      {"1", "optimal constants for real and complex matrix classes (m >= 3)"},
      {"2", "optimal constants for general matrices and the pairwise bound"},
      {"3", "dimension delta(m) of the irreducible Clifford representation"},
      {"4", "optimal constants for Clifford system spans, M >= m + 1 (rows m, columns k)"},
      {"5", "optimal constants for Clifford algebra spans, M >= m - 1 (rows m, columns k)"},
  };
  for (const auto& [id, title] : titles) {
    std::vector<const TableCell*> tc;
    for (const auto& c : cells)
      if (c.table == id) tc.push_back(&c);
    // Wide tables are printed with rows and columns swapped.
    const bool swap = id == "3" || id == "4" || id == "5";
    const auto row_of = [&](const TableCell* c) { return swap ? c->column : c->row; };
    const auto col_of = [&](const TableCell* c) { return swap ? c->row : c->column; };
    std::vector<std::string> rows, cols;
    for (const auto* c : tc) {
      if (std::find(rows.begin(), rows.end(), row_of(c)) == rows.end()) rows.push_back(row_of(c));
      if (std::find(cols.begin(), cols.end(), col_of(c)) == cols.end()) cols.push_back(col_of(c));
    }
    const auto text_of = [](const TableCell* c) {
      return c->value ? c->value->str() + " " + decimal12(*c->value) : std::string("--");
    };
    std::size_t row_w = 0, col_w = 0;
    for (const auto& r : rows) row_w = std::max(row_w, r.size());
    for (const auto& c : cols) col_w = std::max(col_w, c.size());
    for (const auto* c : tc) col_w = std::max(col_w, text_of(c).size());

    os << "Table " << id << ": " << title << "\n";
    os << std::left << std::setw(static_cast<int>(row_w)) << "";
    for (const auto& c : cols) os << "  " << std::setw(static_cast<int>(col_w)) << c;
    os << "\n";
    for (const auto& r : rows) {
      os << std::setw(static_cast<int>(row_w)) << r;
      for (const auto& col : cols) {
        const auto it = std::find_if(tc.begin(), tc.end(), [&](const TableCell* c) { return row_of(c) == r && col_of(c) == col; });
        os << "  " << std::setw(static_cast<int>(col_w)) << (it == tc.end() ? std::string() : text_of(*it));
      }
      os << "\n";
    }
    os << "\n";
  }
  std::string s = os.str();
  // drop trailing padding on each line
  std::string trimmed;
  std::istringstream lines(s);
  for (std::string line; std::getline(lines, line);) {
    line.erase(line.find_last_not_of(' ') + 1);
    trimmed += line + "\n";
  }
  return trimmed;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Laboratory for DDVV-type and Boettcher-Wenzel-type commutator inequalities", "ddvv-lab"};
  app.require_subcommand(1);

  VerifyFlags verify;
  auto* verify_cmd = app.add_subcommand("verify", "sample random tuples (or read --in) and check the inequality");
  add_query_flags(verify_cmd, verify.query);
  verify_cmd->add_option("--samples", verify.samples, "number of random tuples")->capture_default_str();
  verify_cmd->add_option("--seed", verify.seed, "root seed")->capture_default_str();
  verify_cmd->add_option("--tol", verify.tol, "relative violation tolerance")->capture_default_str();
  verify_cmd->add_option("--in", verify.in, "tuple file to evaluate instead of sampling");
  verify_cmd->add_option("--out", verify.out, "write the run manifest here");

  SearchFlags search;
  auto* search_cmd = app.add_subcommand("search", "projected gradient ascent for the largest ratio in a class");
  add_query_flags(search_cmd, search.query);
  search_cmd->add_option("--restarts", search.restarts)->capture_default_str();
  search_cmd->add_option("--iters", search.iters)->capture_default_str();
  search_cmd->add_option("--seed", search.seed)->capture_default_str();
  search_cmd->add_option("--tol", search.tol, "relative tolerance for the bound check")->capture_default_str();
  search_cmd->add_option("--out", search.out, "write the best tuple here (manifest goes to <out>.manifest.json)");

  std::string tables_format = "text";
  std::string tables_out;
  auto* tables_cmd = app.add_subcommand("tables", "regenerate the constant tables");
  tables_cmd->add_option("--format", tables_format, "text or csv")->capture_default_str();
  tables_cmd->add_option("--out", tables_out);

  EmbedFlags embed;
  auto* embed_cmd = app.add_subcommand("embed", "apply phi (complex -> real) or psi (quaternion -> complex)");
  embed_cmd->add_option("--in", embed.in)->required();
  embed_cmd->add_option("--out", embed.out)->required();
  embed_cmd->add_option("--kind", embed.kind, "phi or psi")->required();

  CliffordFlags cliff;
  int cliff_cm = 0;
  auto* cliff_cmd = app.add_subcommand("clifford", "build and validate a Clifford system or algebra frame");
  cliff_cmd->add_option("--m", cliff.m, "Clifford m");
  cliff_cmd->add_option("--cm", cliff_cm, "alias of --m");
  cliff_cmd->add_option("--k", cliff.k)->capture_default_str();
  cliff_cmd->add_option("--kind", cliff.kind, "system or algebra")->capture_default_str();
  cliff_cmd->add_option("--out", cliff.out);

  std::string eq_in, eq_out;
  double eq_tol = 1e-9;
  auto* eq_cmd = app.add_subcommand("check-equality", "report slack and equality residuals of a tuple file");
  eq_cmd->add_option("--in", eq_in)->required();
  eq_cmd->add_option("--tol", eq_tol)->capture_default_str();
  eq_cmd->add_option("--out", eq_out, "write the report manifest here");

  long long em_samples = 1000;
  std::uint64_t em_seed = 0;
  double em_tol = 1e-12;
  std::string em_out;
  auto* em_cmd = app.add_subcommand("em", "Erdos-Mordell inequality through the o(3) reduction");
  em_cmd->add_option("--samples", em_samples)->capture_default_str();
  em_cmd->add_option("--seed", em_seed)->capture_default_str();
  em_cmd->add_option("--tol", em_tol)->capture_default_str();
  em_cmd->add_option("--out", em_out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "ddvv-lab: " << e.what() << "\n";
    return kUsage;
  }

  std::string echo;
  for (int i = 1; i < argc; ++i) echo += (i > 1 ? " " : "") + std::string(argv[i]);
  const Invocation inv{echo, out};

  try {
    if (verify_cmd->parsed()) return cmd_verify(inv, verify);
    if (search_cmd->parsed()) return cmd_search(inv, search);
    if (tables_cmd->parsed()) return cmd_tables(inv, tables_format, tables_out);
    if (embed_cmd->parsed()) return cmd_embed(inv, embed);
    if (cliff_cmd->parsed()) {
      if (cliff_cmd->count("--cm")) {
        if (cliff_cmd->count("--m") && cliff.m != cliff_cm) throw UsageError("--m and --cm disagree");
        cliff.m = cliff_cm;
      }
      return cmd_clifford(inv, cliff);
    }
    if (eq_cmd->parsed()) return cmd_check_equality(inv, eq_in, eq_tol, eq_out);
    if (em_cmd->parsed()) return cmd_em(inv, em_samples, em_seed, em_tol, em_out);
  } catch (const UsageError& e) {
    err << "ddvv-lab: " << e.what() << "\n";
    return kUsage;
  } catch (const DataError& e) {
    err << "ddvv-lab: " << e.what() << "\n";
    return kData;
  } catch (const DomainError& e) {
    err << "ddvv-lab: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "ddvv-lab: " << e.what() << "\n";
    return kIo;
  }
  err << "ddvv-lab: no command\n";
  return kUsage;
}

}  // namespace ddvv::cli
