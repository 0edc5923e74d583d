#pragma once

#include <vector>

#include "torcov/rational.hpp"

namespace torcov {

// Exact solve of an overdetermined system rows * x = rhs.  Equations are
// taken in order until the unknowns are determined; every equation is then
// checked.  Throws UnderdeterminedError if the rank is short, and
// NoSolutionError carrying the first failing equation index otherwise.
std::vector<Rational> solve_exact(const std::vector<std::vector<Rational>>& rows,
                                  const std::vector<Rational>& rhs);

}  // namespace torcov
