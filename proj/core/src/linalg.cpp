#include "scf/linalg.hpp"

namespace scf {

BareissResult bareiss(std::vector<std::vector<ParamPoly>> m) {
  BareissResult res;
  res.last_pivot = ParamPoly(1);
  const int rows = static_cast<int>(m.size());
  if (rows == 0) return res;
  const int cols = static_cast<int>(m[0].size());
  ParamPoly prev(1);
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = r;
    while (p < rows && m[p][c].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    for (int i = r + 1; i < rows; ++i) {
      for (int j = c + 1; j < cols; ++j) {
        ParamPoly num = m[r][c] * m[i][j] - m[i][c] * m[r][j];
        auto q = ParamPoly::divide_exact(num, prev);
        if (!q) throw ArithmeticError("internal: inexact fraction-free step");
        m[i][j] = std::move(*q);
      }
      m[i][c] = ParamPoly();
    }
    prev = m[r][c];
    res.pivot_cols.push_back(c);
    ++r;
  }
  res.rank = r;
  res.last_pivot = prev;
  return res;
}

}  // namespace scf
