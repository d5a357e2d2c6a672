// Prints lhs / rhs for the canonical equality tuple of a few classes next to
// the class constant, then a short search for comparison.

#include <cstdio>

#include "ddvv/extremal.hpp"

int main() {
  using namespace ddvv;
  const ConstantQuery queries[] = {
      {MatrixClass::parse("complex-general"), 2, 3},
      {MatrixClass::parse("complex-symmetric"), 3, 3},
      {MatrixClass::parse("real-skew"), 4, 3},
      {MatrixClass::parse("quaternion-general"), 2, 3},
      {MatrixClass::parse("clifford-system"), 0, 6, 5, 1},
      {MatrixClass::parse("clifford-algebra"), 0, 6, 7, 2},
  };
  std::printf("%-28s %10s %16s %16s\n", "class", "c", "canonical", "search");
  for (const auto& q : queries) {
    const AnyTuple t = canonical_maximizer(q);
    const double ratio = std::visit([](const auto& v) { return ddvv_lhs(v) / ddvv_rhs(v); }, t);
    SearchConfig cfg;
    cfg.query = q;
    cfg.query.n = std::visit([](const auto& v) { return static_cast<int>(v.front().rows()); }, t);
    cfg.restarts = 8;
    cfg.max_iters = 200;
    const SearchResult res = search_max_ratio(cfg);
    std::printf("%-28s %10s %16.12f %16.12f\n", q.cls.name().c_str(), optimal_constant(q).str().c_str(), ratio,
                res.best_ratio);
  }
}
