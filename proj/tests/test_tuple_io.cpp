#include <gtest/gtest.h>

#include <cstring>
#include <filesystem>

#include "ddvv/tuple_io.hpp"

namespace {

using namespace ddvv;

template <Scalar S>
bool bit_equal(const Tuple<S>& a, const Tuple<S>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t r = 0; r < a.size(); ++r) {
    const auto ea = a[r].entries(), eb = b[r].entries();
    if (ea.size() != eb.size() || std::memcmp(ea.data(), eb.data(), ea.size_bytes()) != 0) return false;
  }
  return true;
}

template <Scalar S>
void round_trip(const MatrixClass& c, Structure tag, Rng& rng) {
  auto t = random_tuple<S>(rng, 3, 4, tag);
  t[0](0, 0) = S{1e-300};  // subnormal neighbourhood and awkward decimals
  if (tag == Structure::skew || tag == Structure::skew_hermitian) t[0] = project_structure(t[0], tag);
  const auto rec = make_record({c, 0, 0}, t);
  const std::string text = write_tuple(rec);
  const auto back = read_tuple(text);
  EXPECT_EQ(back.query.cls, c);
  EXPECT_EQ(back.query.n, 3);
  EXPECT_EQ(back.query.count, 4);
  EXPECT_TRUE(bit_equal(std::get<Tuple<S>>(back.matrices), t)) << c.name();
  EXPECT_EQ(write_tuple(back), text);
}

TEST(TupleIo, BitExactRoundTrip) {
  Rng rng(81);
  for (int t = 0; t < 20; ++t) {
    round_trip<double>(MatrixClass::parse("real-general"), Structure::general, rng);
    round_trip<double>(MatrixClass::parse("real-skew"), Structure::skew, rng);
    round_trip<Complex>(MatrixClass::parse("complex-hermitian"), Structure::hermitian, rng);
    round_trip<Complex>(MatrixClass::parse("complex-general"), Structure::general, rng);
    round_trip<Quaternion>(MatrixClass::parse("quaternion-general"), Structure::general, rng);
    round_trip<Quaternion>(MatrixClass::parse("quaternion-skew-hermitian"), Structure::skew_hermitian, rng);
  }
}

TEST(TupleIo, CliffordRoundTrip) {
  const ConstantQuery q{MatrixClass::parse("clifford-algebra"), 0, 3, 4, 1};
  const auto rec = make_record(q, canonical_maximizer(q));
  const auto back = read_tuple(write_tuple(rec));
  EXPECT_EQ(back.query.frame_m, 4);
  EXPECT_EQ(back.query.frame_k, 1);
  EXPECT_EQ(back.query.n, 4);
  EXPECT_TRUE(bit_equal(std::get<Tuple<double>>(back.matrices), std::get<Tuple<double>>(rec.matrices)));
}

TEST(TupleIo, LiteralFile) {
  const std::string text = R"({
    "format_version": 1, "scalar": "complex", "class": "complex-general", "n": 1, "count": 2,
    "matrices": [ [[[1.5, -2]]], [[[0, 0.1]]] ]
  })";
  const auto rec = read_tuple(text);
  const auto& t = std::get<Tuple<Complex>>(rec.matrices);
  EXPECT_EQ(t[0](0, 0), Complex(1.5, -2.0));
  EXPECT_EQ(t[1](0, 0), Complex(0.0, 0.1));
  EXPECT_EQ(rec.tolerance, kStructureTolerance);
}

TEST(TupleIo, MalformedFilesAreDataErrors) {
  const std::string good_head = R"("format_version": 1, "scalar": "real", "class": "real-symmetric", "n": 2, "count": 1)";
  const std::vector<std::string> bad{
      "",
      "not json",
      "[]",
      R"({"format_version": 2, "scalar": "real", "class": "real-general", "n": 1, "count": 1, "matrices": [[[1]]]})",
      R"({"format_version": 1, "scalar": "real", "class": "complex-general", "n": 1, "count": 1, "matrices": [[[1]]]})",
      R"({"format_version": 1, "scalar": "octonion", "class": "real-general", "n": 1, "count": 1, "matrices": [[[1]]]})",
      R"({"format_version": 1, "scalar": "quaternion", "class": "quaternion-hermitian", "n": 1, "count": 1, "matrices": [[[[1,0,0,0]]]]})",
      R"({"format_version": 1, "scalar": "real", "class": "real-general", "n": 0, "count": 1, "matrices": []})",
      "{" + good_head + R"(, "matrices": [[[1, 2], [3, 4]]]})",        // not symmetric
      "{" + good_head + R"(, "matrices": [[[1, 2], [2]]]})",            // ragged
      "{" + good_head + R"(, "matrices": [[[1, 2], [2, 4]], [[1, 0], [0, 1]]]})",  // count mismatch
      "{" + good_head + R"(, "matrices": [[[1, "x"], ["x", 4]]]})",     // wrong entry type
      R"({"format_version": 1, "scalar": "complex", "class": "complex-general", "n": 1, "count": 1, "matrices": [[[[1]]]]})",
      R"({"format_version": 1, "scalar": "real", "class": "clifford-system", "n": 4, "count": 1, "matrices": [[[1,0,0,0],[0,1,0,0],[0,0,1,0],[0,0,0,1]]]})",
      R"({"format_version": 1, "scalar": "real", "class": "clifford-system", "n": 4, "count": 1, "clifford": {"k": 1, "m": 2},
          "matrices": [[[1,0,0,0],[0,1,0,0],[0,0,1,0],[0,0,0,1]]]})",  // identity is off the span
      R"({"format_version": 1, "scalar": "real", "class": "clifford-algebra", "n": 2, "count": 1, "clifford": {"k": 1, "m": 3},
          "matrices": [[[0,1],[-1,0]]]})",  // wrong frame size
  };
  for (const auto& text : bad) EXPECT_THROW(read_tuple(text), DataError) << text;
}

TEST(TupleIo, ValidateRecordChecksKind) {
  TupleRecord rec;
  rec.query = {MatrixClass::parse("complex-general"), 1, 1};
  rec.matrices = Tuple<double>{RealMatrix{{1.0}}};
  EXPECT_THROW(validate_record(rec), DataError);
}

TEST(TupleIo, Files) {
  const auto dir = std::filesystem::temp_directory_path() / "ddvv_tuple_io_test";
  std::filesystem::create_directories(dir);
  const auto path = (dir / "t.json").string();
  write_file(path, "abc\n");
  EXPECT_EQ(read_file(path), "abc\n");
  EXPECT_THROW(read_file((dir / "missing.json").string()), DataError);
  EXPECT_THROW(write_file((dir / "no" / "such" / "dir.json").string(), "x"), std::runtime_error);
  std::filesystem::remove_all(dir);
}

}  // namespace
