#include "sasaki/linalg.hpp"

#include <stdexcept>

namespace sasaki {

SolveResult solve_exact(const LinearSystem& system) {
  const size_t m = system.rows.size();
  if (system.rhs.size() != m)
    throw std::invalid_argument("rhs length does not match row count");
  const size_t n = m == 0 ? 0 : system.rows[0].size();
  for (const auto& row : system.rows)
    if (row.size() != n)
      throw std::invalid_argument("ragged coefficient rows");

  std::vector<std::vector<Rational>> a(system.rows);
  std::vector<Rational> b(system.rhs);

  std::vector<size_t> pivot_col;
  size_t rank = 0;
  for (size_t col = 0; col < n && rank < m; ++col) {
    size_t piv = rank;
    while (piv < m && a[piv][col] == 0) ++piv;
    if (piv == m) continue;
    std::swap(a[piv], a[rank]);
    std::swap(b[piv], b[rank]);
    const Rational inv = Rational(1) / a[rank][col];
    for (size_t j = col; j < n; ++j) a[rank][j] *= inv;
    b[rank] *= inv;
    for (size_t i = 0; i < m; ++i) {
      if (i == rank || a[i][col] == 0) continue;
      const Rational f = a[i][col];
      for (size_t j = col; j < n; ++j) a[i][j] -= f * a[rank][j];
      b[i] -= f * b[rank];
    }
    pivot_col.push_back(col);
    ++rank;
  }

  for (size_t i = rank; i < m; ++i)
    if (b[i] != 0) return {SolveStatus::inconsistent, {}};
  if (rank < n) return {SolveStatus::underdetermined, {}};

  std::vector<Rational> x(n);
  for (size_t i = 0; i < rank; ++i) x[pivot_col[i]] = b[i];
  return {SolveStatus::unique, std::move(x)};
}

}  // namespace sasaki
