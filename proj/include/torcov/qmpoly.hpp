#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "torcov/rational.hpp"
#include "torcov/series.hpp"

namespace torcov {

// G2^a G4^b G6^c.
struct Monomial {
  int a = 0, b = 0, c = 0;
  int weight() const { return 2 * a + 4 * b + 6 * c; }
  auto key() const { return std::tuple(weight(), a, b, c); }
  bool operator<(const Monomial& o) const { return key() < o.key(); }
  bool operator==(const Monomial& o) const { return a == o.a && b == o.b && c == o.c; }
};

// Element of Q[G2, G4, G6], possibly of mixed weight.
class QMPoly {
 public:
  QMPoly() = default;
  static QMPoly constant(const Rational& v);
  // G_k for k in {2,4,6}.
  static QMPoly gen(int k);
  static QMPoly parse(const std::string& text);

  const std::map<Monomial, Rational>& terms() const { return terms_; }
  void add_term(const Monomial& m, const Rational& c);
  Rational coeff(const Monomial& m) const;
  bool is_zero() const { return terms_.empty(); }
  // Largest weight present; 0 for the zero polynomial.
  int max_weight() const;
  QMPoly weight_part(int w) const;

  QMPoly& operator+=(const QMPoly& o);
  QMPoly& operator-=(const QMPoly& o);
  QMPoly& operator*=(const Rational& s);

  // Terms by decreasing (weight, a, b, c), e.g. "-2*G2 + 1/6".
  std::string to_string() const;

 private:
  std::map<Monomial, Rational> terms_;
};

QMPoly operator+(const QMPoly& x, const QMPoly& y);
QMPoly operator-(const QMPoly& x, const QMPoly& y);
QMPoly operator*(const QMPoly& x, const QMPoly& y);
QMPoly operator*(const Rational& s, const QMPoly& x);
bool operator==(const QMPoly& x, const QMPoly& y);
QMPoly qm_pow(const QMPoly& x, int e);

// Bernoulli numbers with B_1 = -1/2.
Rational bernoulli(int n);
// -B_k/(2k) + sum sigma_{k-1}(n) q^n; k even and >= 2.
QSeries eisenstein_series(int k, int order);
// sum_{n>=1} sigma_m(n) q^n.
QSeries sigma_series(int m, int order);

// Monomials of weight <= max_weight in (weight, a, b, c) order.
std::vector<Monomial> qm_basis(int max_weight);
QSeries qm_to_series(const QMPoly& p, int order);

constexpr int kDefaultFitMargin = 10;

// Exact recognition of s as an element of the span of `basis`, using every
// coefficient of s as an equation.  Requires s.order() >= basis.size() + margin.
QMPoly fit_in_basis(const QSeries& s, const std::vector<Monomial>& basis,
                    int margin = kDefaultFitMargin);
QMPoly fit_quasimodular(const QSeries& s, int max_weight, int margin = kDefaultFitMargin);
// Smallest order accepted by fit_quasimodular for this weight and margin.
int fit_min_order(int max_weight, int margin = kDefaultFitMargin);

// q d/dq on Q[G2,G4,G6] via Ramanujan's derivative formulas.
QMPoly qm_dq(const QMPoly& p);
// G_k as a polynomial in G2, G4, G6 (k even, k >= 2).
QMPoly eisenstein_qmpoly(int k);

}  // namespace torcov
