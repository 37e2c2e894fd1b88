#pragma once

#include "liecoh/error.hpp"
#include "liecoh/subsets.hpp"
#include "liecoh/report.hpp"

namespace liecoh::testing {

inline Vector vec(std::initializer_list<long> xs) {
  Vector v;
  for (long x : xs) v.push_back(Scalar(x));
  return v;
}

inline Matrix mat(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<Vector> rs;
  std::size_t cols = 0;
  for (auto r : rows) {
    rs.push_back(vec(r));
    cols = r.size();
  }
  return Matrix::from_rows(rs, cols);
}

// sl2 in the basis h, e f from the A1 preset
inline SemisimpleAlgebra a1() { return build_preset("A1"); }

inline AlgebraPtr sl2_from_brackets(long hf_sign = -2) {
  std::vector<BracketEntry> br{{0, 1, vec({0, 2, 0})}, {0, 2, vec({0, 0, hf_sign})}, {1, 2, vec({1, 0, 0})}};
  return std::make_shared<LieAlgebra>(LieAlgebra::from_brackets({"h", "e", "f"}, br));
}

inline AlgebraPtr abelian_ptr(std::size_t n) { return std::make_shared<LieAlgebra>(LieAlgebra::abelian(n)); }

}  // namespace liecoh::testing
