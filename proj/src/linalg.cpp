#include "torcov/linalg.hpp"

#include <string>

#include "torcov/errors.hpp"

namespace torcov {

std::vector<Rational> solve_exact(const std::vector<std::vector<Rational>>& rows,
                                  const std::vector<Rational>& rhs) {
  const size_t n = rows.empty() ? 0 : rows[0].size();
  if (n == 0) {
    for (size_t i = 0; i < rhs.size(); ++i)
      if (rhs[i] != 0) throw NoSolutionError("no solution at equation " + std::to_string(i), static_cast<long>(i));
    return {};
  }

  // Reduced rows kept in echelon form, pivot column per stored row.
  std::vector<std::vector<Rational>> basis;
  std::vector<size_t> pivots;
  std::vector<Rational> brhs;
  for (size_t i = 0; i < rows.size() && basis.size() < n; ++i) {
    std::vector<Rational> r = rows[i];
    Rational b = rhs[i];
    for (size_t k = 0; k < basis.size(); ++k) {
      const Rational f = r[pivots[k]];
      if (f == 0) continue;
      for (size_t j = 0; j < n; ++j)
        if (basis[k][j] != 0) r[j] -= f * basis[k][j];
      b -= f * brhs[k];
    }
    size_t p = 0;
    while (p < n && r[p] == 0) ++p;
    if (p == n) continue;
    const Rational inv = 1 / r[p];
    for (auto& x : r) x *= inv;
    b *= inv;
    // keep earlier rows reduced against the new pivot
    for (size_t k = 0; k < basis.size(); ++k) {
      const Rational f = basis[k][p];
      if (f == 0) continue;
      for (size_t j = 0; j < n; ++j)
        if (r[j] != 0) basis[k][j] -= f * r[j];
      brhs[k] -= f * b;
    }
    basis.push_back(std::move(r));
    pivots.push_back(p);
    brhs.push_back(b);
  }
  if (basis.size() < n)
    throw UnderdeterminedError("underdetermined: rank " + std::to_string(basis.size()) + " < " +
                               std::to_string(n) + " unknowns");

  std::vector<Rational> x(n);
  for (size_t k = 0; k < n; ++k) x[pivots[k]] = brhs[k];

  for (size_t i = 0; i < rows.size(); ++i) {
    Rational acc = 0;
    for (size_t j = 0; j < n; ++j)
      if (rows[i][j] != 0 && x[j] != 0) acc += rows[i][j] * x[j];
    if (acc != rhs[i])
      throw NoSolutionError("no solution: equation " + std::to_string(i) + " fails", static_cast<long>(i));
  }
  return x;
}

}  // namespace torcov
