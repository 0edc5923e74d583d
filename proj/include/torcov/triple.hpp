#pragma once

#include <string>
#include <vector>

#include "torcov/partitions.hpp"

namespace torcov {

// Ordered ("numbered") tuple of positive widths.
using WidthTuple = std::vector<int>;

// Function on partitions sitting at a vertex.
struct VertexFunction {
  enum class Kind { f_mu, completed, power_sum, one };
  Kind kind = Kind::one;
  Partition mu;  // f_mu and power_sum
  int ell = 0;   // completed

  static VertexFunction f(const Partition& mu);
  // P_ell / ell
  static VertexFunction completed(int ell);
  // prod_i P_{mu_i}
  static VertexFunction power(const Partition& mu);
  static VertexFunction one();

  Rational operator()(const Partition& lambda) const;
  std::string key() const;
};

// (prod w- prod w+)^-1 sum_lambda chi^lambda(w-) chi^lambda(w+) F(lambda);
// zero unless |w-| = |w+|.
Rational a_number(const WidthTuple& wm, const WidthTuple& wp, const VertexFunction& F);
// Version without unramified components, from the subset recursion.
Rational a_prime(const WidthTuple& wm, const WidthTuple& wp, const VertexFunction& F);
Rational abar_prime(const WidthTuple& wm, const WidthTuple& wp, int ell);

// Polynomial in the free width variables u1..um (inputs) and v1..v(n-1)
// (outputs); the last output is |u| - sum v.
struct SszPolynomial {
  int m = 0, n = 0, ell = 0, degree = 0;
  std::vector<std::vector<int>> exponents;
  std::vector<Rational> coeffs;

  Rational eval(const WidthTuple& wm, const WidthTuple& wp) const;
  bool even() const;
  std::string to_string() const;
};

struct SszReport {
  bool ok = false;
  SszPolynomial poly;
  int fit_points = 0;
  int wall_points = 0;
  bool used_walls_for_fit = false;
  // first offending point on failure: inputs then outputs
  WidthTuple witness_minus, witness_plus;
  std::string message;
};

// Interpolates abar_prime(., ., ell) on the grid [1..radius] restricted to
// |w-| = |w+| using chamber-interior points, then checks every wall point
// and evenness.  Throws PreconditionError unless ell+1-m-n is even and >= 0.
SszReport ssz_poly_fit(int m, int n, int ell, int radius);

}  // namespace torcov
