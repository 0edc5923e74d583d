#include "doctest.h"
#include "torcov/elliptic.hpp"
#include "torcov/errors.hpp"
#include "torcov/qmpoly.hpp"

using namespace torcov;

TEST_SUITE("elliptic") {
  TEST_CASE("Fourier coefficients") {
    const int N = 10;
    auto Z = fourier_expansion(EllipticKind::Z, N, N);
    CHECK(Z.at(0) == QSeries::constant(Rational(1, 2), N));
    for (int m : {0, 2, 4}) CHECK(fourier_expansion(EllipticKind::P, N, N, m).at(0).is_zero());
    auto L = fourier_expansion(EllipticKind::L, N, N);
    CHECK(L.at(0).is_zero());
    // zeta^1 of L is sum_n n q^n
    QSeries want(N);
    for (int n = 1; n <= N; ++n) want[n] = n;
    CHECK(L.at(1) == want);
    CHECK(L.at(-1) == want);
    // P^(2) at zeta^-3: (-1)^2 3^3 sum_{n>=1} q^3n
    auto P2 = fourier_expansion(EllipticKind::P, N, N, 2);
    CHECK(P2.at(-3)[3] == 27);
    CHECK(P2.at(-3)[0] == 0);
    CHECK(P2.at(3)[0] == 27);
    auto P1 = fourier_expansion(EllipticKind::P, N, N, 1);
    CHECK(P1.at(-2)[2] == -4);
  }

  TEST_CASE("L identity on the Fourier side") {
    const int N = 8, K = 3 * N;
    auto Z = fourier_expansion(EllipticKind::Z, K, N);
    auto P = fourier_expansion(EllipticKind::P, K, N);
    auto L = fourier_expansion(EllipticKind::L, K, N);
    ZetaExpansion lhs = L + Rational(1, 2) * zeta_mul(Z, Z) + Rational(-1, 2) * P;
    lhs = add_constant(lhs, qm_to_series(QMPoly::parse("G2 - 1/12"), N));
    CHECK(lhs.K >= N);
    for (int k = -lhs.K; k <= lhs.K; ++k) CHECK(lhs.at(k).is_zero());
  }

  TEST_CASE("L identity on the Laurent side") {
    auto Z = laurent_expansion(EllipticKind::Z, 5);
    auto P = laurent_expansion(EllipticKind::P, 4);
    auto L = laurent_expansion(EllipticKind::L, 4);
    LaurentU x = L + Rational(1, 2) * (Z * Z) + Rational(-1, 2) * P;
    x = add_constant(x, QMPoly::parse("G2 - 1/12"));
    CHECK(x.max_degree >= 4);
    CHECK(x.coeffs.empty());
    CHECK(Z.residue() == QMPoly::constant(-1));
    CHECK(P.at(0) == QMPoly::parse("2*G2"));
  }

  TEST_CASE("odd powers of Z - 1/2 have no constant term") {
    const int N = 10;
    auto Zh = add_constant(fourier_expansion(EllipticKind::Z, N, N), QSeries::constant(Rational(-1, 2), N));
    for (int e = 1; e <= 7; e += 2) {
      std::vector<ZetaExpansion> fs(e, Zh);
      CHECK(constant_term_product(fs, N).is_zero());
    }
  }

  TEST_CASE("powers of Z") {
    CHECK(zeta0_Z_power(1).to_string() == "1/2");
    CHECK(zeta0_Z_power(2).to_string() == "-2*G2 + 1/6");
    CHECK(zeta0_Z_power(3) == QMPoly::parse("-3*G2"));
    CHECK(zeta0_Z_power(4) == QMPoly::parse("8*G2^2 - 1/3*G4 - 2*G2 - 1/30"));
    CHECK(zeta0_Z_power(6) == QMPoly::parse("-1/60*G6 + 4*G4*G2 - 40*G2^3 + 20*G2^2 - 5/6*G4 + G2 + 1/42"));
    for (int e = 1; e <= 6; ++e)
      CHECK(fit_quasimodular(zeta0_Z_power_series(e, fit_min_order(e)), e) == zeta0_Z_power(e));
    CHECK_THROWS_AS(zeta0_Z_power(0), PreconditionError);
  }

  TEST_CASE("constant terms of graphs") {
    const int N = 17;
    auto tri = GlobalGraph::parse("1-2,1-2,1-2");
    QSeries s = constant_term_graph(tri, {0, 0, 0}, N);
    CHECK(s == graph_sum_S_total(tri, {0, 0, 0}, N));
    CHECK(fit_quasimodular(s, 6) == QMPoly::parse("-16*G2^3 + 4*G4*G2 + 7/30*G6"));
    auto single = GlobalGraph::parse("1-2");
    CHECK(constant_term_graph(single, {0}, N) == graph_sum_S_total(single, {0}, N));
    CHECK_THROWS_AS(constant_term_graph(GlobalGraph::parse("1-1"), {0}, N), PreconditionError);
    CHECK_THROWS_AS(constant_term_graph(tri, {1, 0, 0}, N), PreconditionError);
  }

  TEST_CASE("raising the zeta cutoff changes nothing") {
    const int N = 9;
    auto P = [&](int K) { return fourier_expansion(EllipticKind::P, K, N); };
    CHECK(constant_term_product({P(N), P(N), P(N)}, N) == constant_term_product({P(3 * N), P(3 * N), P(3 * N)}, N));
    auto g = GlobalGraph::parse("1-2,1-3,2-3,2-3");
    CHECK(constant_term_edges(g, {P(N), P(N), P(N), P(N)}, N) ==
          constant_term_edges(g, {P(2 * N), P(2 * N), P(2 * N), P(2 * N)}, N));
  }
}
