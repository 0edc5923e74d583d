#include "doctest.h"
#include "torcov/errors.hpp"
#include "torcov/hurwitz.hpp"
#include "torcov/qmpoly.hpp"
#include "torcov/siegel_veech.hpp"

using namespace torcov;

TEST_SUITE("siegel_veech") {
  TEST_CASE("trivial profiles") {
    const int N = 10;
    CHECK(c_series({}, 1, N) == dq(partition_gf(N)));
    CHECK(c_prime_series({}, -1, N).is_zero());
    CHECK(c_connected_series({}, -1, N).is_zero());
    const Profile t = parse_profile("(3)");
    CHECK(c_connected_series(t, -1, N) == c_prime_series(t, -1, N));
  }

  TEST_CASE("H(1,1)") {
    const Profile p = parse_profile("(2),(2)");
    const int N = fit_min_order(6);
    QSeries c = c_connected_series(p, -1, N);
    CHECK(c == c_prime_series(p, -1, N));
    CHECK(c == Rational(5, 4) * n_connected_series(p, N));
    CHECK(fit_quasimodular(c, 6) == QMPoly::parse("-10/3*G2^3 + 5/6*G2*G4 + 7/144*G6"));
  }

  TEST_CASE("oracle") {
    const Profile p = parse_profile("(2),(2)");
    CHECK(brute_force_sv(p, 2, -1, Variant::all) == c_series(p, -1, 3)[2]);
    for (int pp : {-1, 1, 3})
      for (Variant v : {Variant::all, Variant::prime, Variant::connected}) {
        QSeries s = c_variant_series(p, pp, 4, v);
        for (int d = 0; d <= 4; ++d) CHECK(brute_force_sv(p, d, pp, v) == s[d]);
      }
    const Profile q = parse_profile("(3)");
    QSeries s = c_connected_series(q, 1, 5);
    for (int d = 0; d <= 5; ++d) CHECK(brute_force_sv(q, d, 1, Variant::connected) == s[d]);
  }

  TEST_CASE("connected series are quasimodular for odd p") {
    for (const char* s : {"(2),(2)", "(3)"})
      for (int p : {-1, 1}) {
        const Profile pr = parse_profile(s);
        const int w = profile_weight(pr) + p + 1;
        CHECK_NOTHROW(fit_quasimodular(c_connected_series(pr, p, fit_min_order(w)), w));
      }
  }

  TEST_CASE("marked loop sums") {
    const int N = 12;
    auto loop = orientations(GlobalGraph::parse("1-1"))[0];
    CHECK(sv_graph_sum(loop, {0}, N) == sigma_series(1, N));
    CHECK(sv_graph_sum(loop, {2}, N) == dq(sigma_series(1, N)));
    CHECK(sv_graph_sum(loop, {4}, N) == dq(sigma_series(3, N)));
  }

  TEST_CASE("graph assembly matches the bracket path") {
    const int N = 9;
    for (const char* s : {"(3)", "(2),(2)", "(4)", "(2,2)"})
      for (int p : {-1, 1, 3}) {
        const Profile pr = parse_profile(s);
        CHECK(sv_assemble_total(pr, p, N) == c_prime_series(pr, p, N));
      }
  }

  TEST_CASE("triple edge") {
    const int N = 14;
    auto g = GlobalGraph::parse("1-2,1-2,1-2");
    const Profile p = parse_profile("(2),(2)");
    QSeries c = c_connected_series(p, -1, N);
    CHECK(Rational(1, 6) * sv_per_graph(g, p, N, -1) == c);
    CHECK(Rational(1, 6) * sv_graph_sum_total(g, {0, 0, 0}, N) == c);
    for (int i0 = 0; i0 < 3; ++i0) CHECK(sv_constant_term(g, {0, 0, 0}, i0, N) == sv_graph_sum_total(g, {0, 0, 0}, N, i0));
  }

  TEST_CASE("constant term with a derivative factor") {
    const int N = 10;
    auto g = GlobalGraph::parse("1-2,1-2,1-3,2-3");
    CHECK(sv_constant_term(g, {2, 0, 0, 0}, 0, N) == sv_graph_sum_total(g, {2, 0, 0, 0}, N, 0));
    CHECK(sv_constant_term(g, {0, 2, 0, 0}, 2, N) == sv_graph_sum_total(g, {0, 2, 0, 0}, N, 2));
    CHECK_THROWS_AS(sv_constant_term(g, {0, 0, 0, 0}, 4, N), PreconditionError);
  }
}
