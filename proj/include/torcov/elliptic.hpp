#pragma once

#include <map>
#include <vector>

#include "torcov/graph.hpp"
#include "torcov/qmpoly.hpp"
#include "torcov/series.hpp"

namespace torcov {

// Fourier expansion in one variable zeta on |q| < |zeta| < 1: coefficient
// series for zeta^k, |k| <= K, each truncated at q^N.
struct ZetaExpansion {
  int K = 0;
  int N = 0;
  std::map<int, QSeries> coeffs;

  QSeries at(int k) const;
  // Drops zero coefficients.
  void normalize();
};

enum class EllipticKind {
  Z,     // 1/2 + sum_k (zeta^k + sum_n q^nk (zeta^k - zeta^-k))
  P,     // m-th derivative of P, see fourier_expansion
  L,     // sum_{k,n} n q^nk (zeta^k + zeta^-k)
  DqP,   // q d/dq of the m-th derivative of P
};

ZetaExpansion fourier_expansion(EllipticKind which, int K, int N, int m = 0);

ZetaExpansion operator+(const ZetaExpansion& a, const ZetaExpansion& b);
ZetaExpansion operator*(const Rational& s, const ZetaExpansion& a);
// Adds a zeta-free series.
ZetaExpansion add_constant(const ZetaExpansion& a, const QSeries& c);
// Product; coefficients are kept for |k| <= min(a.K, b.K) - N, where they
// are exact through q^N because every zeta^-j carries q^j at least.
ZetaExpansion zeta_mul(const ZetaExpansion& a, const ZetaExpansion& b);

// [zeta^0] of a product of one-variable expansions.
QSeries constant_term_product(const std::vector<ZetaExpansion>& factors, int order);

// [zeta_n^0 ... zeta_1^0] of prod_e factor_e(zeta_a / zeta_b), edge e = (a < b),
// extracting variables in label order.  Loops are rejected.
QSeries constant_term_edges(const GlobalGraph& g, const std::vector<ZetaExpansion>& factors, int order);
// Factors P^(m_e) on every edge.
QSeries constant_term_graph(const GlobalGraph& g, const EdgeExponents& m, int order);

// Laurent expansion in u = z with quasimodular coefficients.
struct LaurentU {
  int max_degree = 0;  // coefficients known exactly up to u^max_degree
  std::map<int, QMPoly> coeffs;

  QMPoly at(int k) const;
  int valuation() const;
  QMPoly residue() const { return at(-1); }
};

LaurentU laurent_expansion(EllipticKind which, int max_degree);
LaurentU operator+(const LaurentU& a, const LaurentU& b);
LaurentU operator*(const Rational& s, const LaurentU& a);
LaurentU operator*(const LaurentU& a, const LaurentU& b);
LaurentU add_constant(const LaurentU& a, const QMPoly& c);

// Exact [zeta^0] Z^e as a polynomial in G2, G4, G6, checked against the
// Fourier side through q^N (MismatchError on disagreement).
QMPoly zeta0_Z_power(int e, int N = 12);
// Fourier side only.
QSeries zeta0_Z_power_series(int e, int N);

}  // namespace torcov
