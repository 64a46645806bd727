#include "eph/symexpr/lsolve.hpp"

#include "eph/symexpr/normal.hpp"

namespace eph::sym {

Binding lsolve(const std::vector<Equation> &equations,
               const std::vector<Expr> &vars) {
  const std::size_t rows = equations.size();
  const std::size_t cols = vars.size();
  for (const auto &v : vars)
    if (!v.is_symbol())
      throw std::invalid_argument("lsolve: not a symbol: " + v.str());

  Binding at_origin;
  for (const auto &v : vars)
    at_origin.bind(v, Expr(0));

  // Augmented matrix [A | b] with A x = b.
  std::vector<std::vector<Expr>> m(rows, std::vector<Expr>(cols + 1));
  for (std::size_t i = 0; i < rows; ++i) {
    Expr eq = normal(equations[i].lhs - equations[i].rhs);
    for (std::size_t j = 0; j < cols; ++j) {
      Expr a = normal(diff(eq, vars[j]));
      for (const auto &v : vars)
        if (a.has(v.name()))
          throw NonLinear("lsolve: equation " + std::to_string(i) +
                          " is not affine in " + vars[j].str());
      m[i][j] = a;
    }
    m[i][cols] = normal(-subs(eq, at_origin));
  }

  std::size_t row = 0;
  std::vector<std::size_t> pivot_col;
  for (std::size_t col = 0; col < cols; ++col) {
    std::size_t p = row;
    while (p < rows && m[p][col].is_zero())
      ++p;
    if (p == rows)
      throw SingularSystem("lsolve: zero pivot for " + vars[col].str());
    std::swap(m[p], m[row]);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == row || m[r][col].is_zero())
        continue;
      Expr factor = m[r][col] / m[row][col];
      for (std::size_t c = col; c <= cols; ++c)
        m[r][c] = normal(m[r][c] - factor * m[row][c]);
    }
    pivot_col.push_back(col);
    ++row;
  }
  for (std::size_t r = row; r < rows; ++r)
    if (!m[r][cols].is_zero())
      throw SingularSystem("lsolve: inconsistent system");

  Binding solution;
  for (std::size_t i = 0; i < cols; ++i)
    solution.bind(vars[pivot_col[i]], normal(m[i][cols] / m[i][pivot_col[i]]));
  return solution;
}

} // namespace eph::sym
