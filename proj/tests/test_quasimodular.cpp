#include "doctest.h"
#include "torcov/errors.hpp"
#include "torcov/qmpoly.hpp"

#include <random>

using namespace torcov;

namespace {

long sigma(int m, int n) {
  long s = 0;
  for (int d = 1; d <= n; ++d)
    if (n % d == 0) {
      long p = 1;
      for (int i = 0; i < m; ++i) p *= d;
      s += p;
    }
  return s;
}

// sum_{k<n+1} C(n+1,k) B_k = 0
std::vector<Rational> bernoulli_table(int n) {
  std::vector<Rational> b(n + 1);
  b[0] = 1;
  for (int m = 1; m <= n; ++m) {
    Rational acc = 0;
    for (int k = 0; k < m; ++k) acc += Rational(binomial(m + 1, k)) * b[k];
    b[m] = -acc / (m + 1);
  }
  return b;
}

}  // namespace

TEST_SUITE("quasimodular") {
  TEST_CASE("Bernoulli numbers") {
    auto b = bernoulli_table(14);
    for (int n = 0; n <= 14; ++n) CHECK(bernoulli(n) == b[n]);
    CHECK(bernoulli(1) == Rational(-1, 2));
    CHECK(bernoulli(4) == Rational(-1, 30));
  }

  TEST_CASE("Eisenstein series") {
    QSeries g2 = eisenstein_series(2, 6);
    CHECK(g2[0] == Rational(-1, 24));
    for (int n = 1; n <= 6; ++n) CHECK(g2[n] == sigma(1, n));
    CHECK(eisenstein_series(4, 3)[0] == Rational(1, 240));
    CHECK(eisenstein_series(6, 3)[0] == Rational(-1, 504));
    for (int k : {2, 4, 6, 8}) CHECK(eisenstein_series(k, 0)[0] == -bernoulli(k) / (2 * k));
    CHECK_THROWS_AS(eisenstein_series(3, 5), PreconditionError);
    CHECK_THROWS_AS(eisenstein_series(0, 5), PreconditionError);
  }

  TEST_CASE("divisor sums") {
    QSeries s = sigma_series(1, 5);
    std::vector<long> want = {0, 1, 3, 4, 7, 6};
    for (int n = 0; n <= 5; ++n) CHECK(s[n] == want[n]);
    QSeries g4 = eisenstein_series(4, 20);
    CHECK(sigma_series(3, 20) == g4 - QSeries::constant(g4[0], 20));
  }

  TEST_CASE("basis dimension") {
    for (int k = 0; k <= 16; ++k) {
      int count = 0;
      for (int a = 0; 2 * a <= k; ++a)
        for (int b = 0; 2 * a + 4 * b <= k; ++b)
          for (int c = 0; 2 * a + 4 * b + 6 * c <= k; ++c) ++count;
      CHECK(static_cast<int>(qm_basis(k).size()) == count);
    }
  }

  TEST_CASE("evaluation") {
    CHECK(qm_to_series(QMPoly::constant(5), 4) == QSeries::constant(5, 4));
    CHECK(qm_to_series(QMPoly::gen(2), 8) == eisenstein_series(2, 8));
    QSeries s = qm_to_series(QMPoly::parse("-8/3*G2^3 + 2/3*G4*G2 + 7/180*G6"), 5);
    std::vector<long> want = {0, 0, 2, 16, 60, 160};
    for (int n = 0; n <= 5; ++n) CHECK(s[n] == want[n]);
  }

  TEST_CASE("parse and print") {
    QMPoly p = QMPoly::parse("-8/3*G2^3 + 2/3*G4*G2 + 7/180*G6");
    CHECK(p.to_string() == "-8/3*G2^3 + 2/3*G4*G2 + 7/180*G6");
    CHECK(QMPoly::parse("-2*G2 + 1/6").to_string() == "-2*G2 + 1/6");
    CHECK(QMPoly().to_string() == "0");
    CHECK_THROWS_AS(QMPoly::parse("G3"), ParseError);
    CHECK(p.max_weight() == 6);
  }

  TEST_CASE("fitting") {
    CHECK(fit_quasimodular(QSeries(20), 6).is_zero());
    CHECK_THROWS_AS(fit_quasimodular(QSeries(10), 6), UnderdeterminedError);
    CHECK_THROWS_AS(fit_quasimodular(sigma_series(2, 30), 12), UnderdeterminedError);
    CHECK_THROWS_AS(fit_quasimodular(sigma_series(2, 30), 12, 5), NoSolutionError);
    try {
      fit_quasimodular(sigma_series(2, 40), 12);
    } catch (const NoSolutionError& e) {
      CHECK(e.witness >= 0);
    }
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> d(-6, 6);
    for (int trial = 0; trial < 4; ++trial) {
      QMPoly p;
      for (const auto& m : qm_basis(12)) {
        Rational c(d(rng), 1 + (d(rng) + 6) % 4);
        c.canonicalize();
        if (c != 0) p.add_term(m, c);
      }
      CHECK(fit_quasimodular(qm_to_series(p, fit_min_order(12)), 12) == p);
    }
  }

  TEST_CASE("Ramanujan derivatives match q-expansions") {
    for (int k : {2, 4, 6}) {
      QMPoly d = qm_dq(QMPoly::gen(k));
      CHECK(qm_to_series(d, 20) == dq(eisenstein_series(k, 20)));
    }
    for (int k = 8; k <= 14; k += 2) CHECK(qm_to_series(eisenstein_qmpoly(k), 30) == eisenstein_series(k, 30));
  }
}
