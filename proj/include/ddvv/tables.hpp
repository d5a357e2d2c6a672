#pragma once

// Constant tables regenerated from optimal_constant / bw_constant / delta.

#include <optional>
#include <string>
#include <vector>

#include "ddvv/constants.hpp"

namespace ddvv {

struct TableCell {
  std::string table;   // "1" .. "5"
  std::string row;
  std::string column;
  std::optional<Rational> value;  // empty cell ("--")
};

inline constexpr int kTableMaxK = 4;
inline constexpr int kTableMaxM = 16;

inline std::vector<TableCell> constant_tables(int max_k = kTableMaxK, int max_m = kTableMaxM) {
  std::vector<TableCell> cells;
  using K = ScalarKind;
  using T = Structure;

  // Table 1: m >= 3 (queried at m = 3).
  const auto t1 = [&](const std::string& row, T s, int n) {
    for (K kind : {K::real, K::complex}) {
      const MatrixClass c{kind, s};
      std::optional<Rational> v;
      if (c.valid()) v = optimal_constant({c, n, 3});
      cells.push_back({"1", row, std::string(to_string(kind)), v});
    }
  };
  t1("symmetric", T::symmetric, 4);
  t1("skew-symmetric (n=3)", T::skew, 3);
  t1("skew-symmetric (n>=4)", T::skew, 4);
  t1("Hermitian", T::hermitian, 4);
  t1("skew-Hermitian", T::skew_hermitian, 4);
  t1("general", T::general, 4);

  // Table 2: general matrices.
  for (K kind : {K::real, K::complex, K::quaternion}) {
    const std::string col(to_string(kind));
    cells.push_back({"2", "DDVV(m>=3)", col, optimal_constant({{kind, T::general}, 4, 3})});
    cells.push_back({"2", "DDVV(m=2)", col, optimal_constant({{kind, T::general}, 4, 2})});
    cells.push_back({"2", "BW", col, bw_constant(kind)});
  }

  // Table 3: irreducible dimensions.
  for (int m = 1; m <= max_m; ++m) cells.push_back({"3", "delta", std::to_string(m), Rational(delta(m))});

  // Tables 4 and 5: Clifford spans with M large enough that N = generator count.
  for (int k = 1; k <= max_k; ++k) {
    for (int m = 1; m <= max_m; ++m)
      cells.push_back({"4", "k=" + std::to_string(k), "m=" + std::to_string(m),
                       clifford_constant(FrameKind::system, m, k, m + 1)});
  }
  for (int k = 1; k <= max_k; ++k) {
    for (int m = 1; m <= max_m; ++m) {
      std::optional<Rational> v;
      if (m >= 2) v = clifford_constant(FrameKind::algebra, m, k, m - 1);
      cells.push_back({"5", "k=" + std::to_string(k), "m=" + std::to_string(m), v});
    }
  }
  return cells;
}

}  // namespace ddvv
