#pragma once

// Tuple files (versioned JSON).
//
//   {
//     "format_version": 1,
//     "scalar": "real" | "complex" | "quaternion",
//     "class": "complex-hermitian",
//     "n": 2, "count": 3,
//     "tolerance": 1e-10,
//     "clifford": {"k": 1, "m": 2},          // Clifford spans only
//     "matrices": [ [[entry, ...], ...], ... ]
//   }
//
// Entries: real -> number, complex -> [re, im], quaternion -> [w, x, y, z].
// Doubles are written with the shortest representation that round-trips.

#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "ddvv/extremal.hpp"

namespace ddvv {

class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kTupleFormatVersion = 1;

struct TupleRecord {
  ConstantQuery query;
  AnyTuple matrices;
  double tolerance = kStructureTolerance;
};

namespace detail {

using ojson = nlohmann::ordered_json;

inline ojson encode(double v) { return v; }
inline ojson encode(const Complex& v) { return ojson::array({v.real(), v.imag()}); }
inline ojson encode(const Quaternion& v) { return ojson::array({v.w, v.x, v.y, v.z}); }

template <Scalar S>
S decode(const ojson& j) {
  const auto num = [](const ojson& v) {
    if (!v.is_number()) throw DataError("matrix entry component is not a number");
    return v.get<double>();
  };
  if constexpr (std::is_same_v<S, double>) {
    return num(j);
  } else {
    constexpr std::size_t dim = scalar_traits<S>::real_dim;
    if (!j.is_array() || j.size() != dim)
      throw DataError("expected " + std::to_string(dim) + "-component entry for " + std::string(to_string(kind_of<S>)));
    S s{};
    for (std::size_t c = 0; c < dim; ++c) scalar_traits<S>::set_component(s, static_cast<int>(c), num(j[c]));
    return s;
  }
}

template <Scalar S>
ojson encode_tuple(const Tuple<S>& t) {
  ojson out = ojson::array();
  for (const auto& b : t) {
    ojson rows = ojson::array();
    for (std::size_t i = 0; i < b.rows(); ++i) {
      ojson row = ojson::array();
      for (std::size_t j = 0; j < b.cols(); ++j) row.push_back(encode(b(i, j)));
      rows.push_back(std::move(row));
    }
    out.push_back(std::move(rows));
  }
  return out;
}

template <Scalar S>
Tuple<S> decode_tuple(const ojson& arr, std::size_t n, std::size_t count) {
  if (!arr.is_array() || arr.size() != count)
    throw DataError("'matrices' must hold exactly " + std::to_string(count) + " matrices");
  Tuple<S> t;
  for (const auto& mj : arr) {
    if (!mj.is_array() || mj.size() != n) throw DataError("matrix must have " + std::to_string(n) + " rows");
    Matrix<S> b(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      if (!mj[i].is_array() || mj[i].size() != n) throw DataError("matrix row must have " + std::to_string(n) + " entries");
      for (std::size_t j = 0; j < n; ++j) b(i, j) = decode<S>(mj[i][j]);
    }
    t.push_back(std::move(b));
  }
  return t;
}

inline ScalarKind parse_kind(const std::string& s) {
  if (s == "real") return ScalarKind::real;
  if (s == "complex") return ScalarKind::complex;
  if (s == "quaternion") return ScalarKind::quaternion;
  throw DataError("unknown scalar kind '" + s + "'");
}

}  // namespace detail

/// Checks that every member satisfies the class predicate within the record's
/// tolerance (Clifford spans: span membership).
inline void validate_record(const TupleRecord& rec) {
  const MatrixClass& c = rec.query.cls;
  if (kind_of_tuple(rec.matrices) != c.kind) throw DataError("scalar kind does not match class " + c.name());
  std::visit(
      [&](const auto& t) {
        using S = typename std::decay_t<decltype(t)>::value_type::value_type;
        if (t.empty()) throw DataError("tuple is empty");
        if (c.is_clifford()) {
          if constexpr (std::is_same_v<S, double>) {
            const FrameKind fk = c.structure == Structure::clifford_system ? FrameKind::system : FrameKind::algebra;
            const CliffordFrame frame = build_frame(fk, rec.query.frame_m, rec.query.frame_k);
            if (static_cast<std::size_t>(rec.query.n) != frame.size())
              throw DataError("n = " + std::to_string(rec.query.n) + " does not match frame size " + std::to_string(frame.size()));
            try {
              coefficient_vectors(frame, t, rec.tolerance);
            } catch (const OutOfSpanError& e) {
              throw DataError(e.what());
            }
          }
          return;
        }
        for (std::size_t r = 0; r < t.size(); ++r) {
          const auto cl = classify(t[r], c.structure, rec.tolerance);
          if (!cl.holds)
            throw DataError("matrix " + std::to_string(r + 1) + " is not " + std::string(to_string(c.structure)) +
                            " (residual " + std::to_string(cl.residual) + ")");
        }
      },
      rec.matrices);
}

inline std::string write_tuple(const TupleRecord& rec) {
  detail::ojson j;
  j["format_version"] = kTupleFormatVersion;
  j["scalar"] = std::string(to_string(rec.query.cls.kind));
  j["class"] = rec.query.cls.name();
  j["n"] = rec.query.n;
  j["count"] = rec.query.count;
  j["tolerance"] = rec.tolerance;
  if (rec.query.cls.is_clifford()) j["clifford"] = {{"k", rec.query.frame_k}, {"m", rec.query.frame_m}};
  j["matrices"] = std::visit([](const auto& t) { return detail::encode_tuple(t); }, rec.matrices);
  return j.dump(1) + "\n";
}

inline TupleRecord read_tuple(const std::string& text) {
  detail::ojson j;
  try {
    j = detail::ojson::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw DataError(std::string("malformed tuple file: ") + e.what());
  }
  try {
    if (!j.is_object()) throw DataError("tuple file must be a JSON object");
    if (j.value("format_version", -1) != kTupleFormatVersion) throw DataError("unsupported format_version");
    TupleRecord rec;
    const ScalarKind kind = detail::parse_kind(j.at("scalar").get<std::string>());
    try {
      rec.query.cls = MatrixClass::parse(j.at("class").get<std::string>());
    } catch (const DomainError& e) {
      throw DataError(e.what());
    }
    if (rec.query.cls.kind != kind) throw DataError("scalar does not match class");
    rec.query.n = j.at("n").get<int>();
    rec.query.count = j.at("count").get<int>();
    if (rec.query.n < 1 || rec.query.count < 1) throw DataError("n and count must be positive");
    rec.tolerance = j.value("tolerance", kStructureTolerance);
    if (rec.query.cls.is_clifford()) {
      const auto& cj = j.at("clifford");
      rec.query.frame_k = cj.at("k").get<int>();
      rec.query.frame_m = cj.at("m").get<int>();
      const bool alg = rec.query.cls.structure == Structure::clifford_algebra;
      if (rec.query.frame_k < 1 || rec.query.frame_m < (alg ? 2 : 1)) throw DataError("invalid Clifford parameters");
    }
    const auto n = static_cast<std::size_t>(rec.query.n);
    const auto count = static_cast<std::size_t>(rec.query.count);
    const auto& mats = j.at("matrices");
    switch (kind) {
      case ScalarKind::real: rec.matrices = detail::decode_tuple<double>(mats, n, count); break;
      case ScalarKind::complex: rec.matrices = detail::decode_tuple<Complex>(mats, n, count); break;
      case ScalarKind::quaternion: rec.matrices = detail::decode_tuple<Quaternion>(mats, n, count); break;
    }
    validate_record(rec);
    return rec;
  } catch (const nlohmann::json::exception& e) {
    throw DataError(std::string("malformed tuple file: ") + e.what());
  }
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
  if (!out) throw std::runtime_error("write failed for " + path);
}

inline TupleRecord make_record(const ConstantQuery& q, AnyTuple t) {
  TupleRecord rec;
  rec.query = q;
  rec.query.count = static_cast<int>(tuple_length(t));
  rec.query.n = std::visit([](const auto& v) { return static_cast<int>(v.front().rows()); }, t);
  rec.matrices = std::move(t);
  return rec;
}

}  // namespace ddvv
