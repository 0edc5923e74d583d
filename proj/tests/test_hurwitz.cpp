#include "doctest.h"
#include "torcov/errors.hpp"
#include "torcov/hurwitz.hpp"
#include "torcov/qmpoly.hpp"

using namespace torcov;

TEST_SUITE("hurwitz") {
  TEST_CASE("empty profile") {
    CHECK(n_series({}, 10) == partition_gf(10));
    CHECK(n_prime_series({}, 10) == QSeries::constant(1, 10));
    CHECK(n_connected_series({}, 10).is_zero());
  }

  TEST_CASE("small coefficients") {
    const Profile p = parse_profile("(2),(2)");
    CHECK(n_series(p, 4)[2] == 2);
    CHECK(n_prime_series(p, 12) == n_connected_series(p, 12));
    const Profile t = parse_profile("(3)");
    CHECK(n_connected_series(t, 12) == n_prime_series(t, 12));
    CHECK(n_prime_series(t, 12) * partition_gf(12) == n_series(t, 12));
  }

  TEST_CASE("published connected counts") {
    std::vector<long> w22 = {0, 0, 2, 16, 60, 160, 360, 672, 1240};
    std::vector<long> w2222 = {0, 0, 2, 160, 2448, 18304, 90552, 341568, 1068928};
    QSeries a = n_connected_series(parse_profile("(2),(2)"), 8);
    QSeries b = n_connected_series(parse_profile("(2),(2),(2),(2)"), 8);
    for (int n = 0; n <= 8; ++n) {
      CHECK(a[n] == w22[n]);
      CHECK(b[n] == w2222[n]);
    }
  }

  TEST_CASE("connected counts are quasimodular") {
    for (const char* s : {"(3)", "(2),(2)", "(4)", "(2,2)", "(2),(2),(2),(2)"}) {
      const Profile p = parse_profile(s);
      const int w = profile_weight(p);
      CHECK_NOTHROW(fit_quasimodular(n_connected_series(p, fit_min_order(w)), w));
    }
  }

  TEST_CASE("oracle conventions at d = 0") {
    const Profile p = parse_profile("(2),(2)");
    CHECK(brute_force_n({}, 0, Variant::all) == 1);
    CHECK(brute_force_n({}, 0, Variant::prime) == 1);
    CHECK(brute_force_n({}, 0, Variant::connected) == 0);
    // a nonempty profile cannot be realised in degree 0, as in the character formula
    CHECK(brute_force_n(p, 0, Variant::all) == 0);
    CHECK(n_series(p, 0)[0] == 0);
    CHECK(brute_force_n(p, 0, Variant::connected) == 0);
    CHECK(brute_force_n(p, 2, Variant::connected) == 2);
  }

  TEST_CASE("oracle agrees with the character formula") {
    for (const char* s : {"(3)", "(2),(2)", "(2,2)", "(3),(2)"}) {
      const Profile p = parse_profile(s);
      for (Variant v : {Variant::all, Variant::prime, Variant::connected}) {
        QSeries series = n_variant_series(p, 5, v);
        for (int d = 0; d <= 5; ++d) CHECK(brute_force_n(p, d, v) == series[d]);
      }
    }
  }

  TEST_CASE("two branch points with three-cycles, labeled inversion") {
    const Profile p = parse_profile("(3),(3)");
    QSeries c = n_connected_series(p, 6);
    for (int d = 0; d <= 5; ++d) CHECK(brute_force_n(p, d, Variant::connected) == c[d]);
  }

  TEST_CASE("budget is enforced") {
    CHECK_THROWS_AS(brute_force_n(parse_profile("(2),(2)"), 6, Variant::all, 1000), BudgetError);
  }

  TEST_CASE("variants") {
    CHECK(parse_variant("no-unramified") == Variant::prime);
    CHECK(to_string(parse_variant("connected")) == "connected");
    CHECK_THROWS_AS(parse_variant("bogus"), ParseError);
  }

  TEST_CASE("set partitions") {
    int count = 0;
    for_each_set_partition(4, [&](const std::vector<std::vector<int>>&) { ++count; });
    CHECK(count == 15);
    CHECK(ramification_label_factor(parse_profile("(2,2),(3)")) == 2);
    CHECK(ramification_point_count(parse_profile("(2,2),(3)")) == 3);
  }
}
