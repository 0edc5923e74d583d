#include "doctest.h"
#include "torcov/errors.hpp"
#include "torcov/series.hpp"

#include <random>

using namespace torcov;

namespace {

QSeries from(std::vector<long> c) {
  QSeries s(static_cast<int>(c.size()) - 1);
  for (size_t i = 0; i < c.size(); ++i) s[i] = c[i];
  return s;
}

// p(n) by counting partitions with parts <= k
long count_partitions(int n, int k) {
  if (n == 0) return 1;
  if (k == 0) return 0;
  long r = count_partitions(n, k - 1);
  if (k <= n) r += count_partitions(n - k, k);
  return r;
}

QSeries random_series(std::mt19937& rng, int order) {
  std::uniform_int_distribution<int> d(-5, 5);
  QSeries s(order);
  for (int i = 0; i <= order; ++i) {
    Rational r(d(rng), 1 + (d(rng) + 5) % 3);
    r.canonicalize();
    s[i] = r;
  }
  return s;
}

}  // namespace

TEST_SUITE("series") {
  TEST_CASE("rationals stay canonical") {
    Rational r = parse_rational("6/-4");
    CHECK(to_string(r) == "-3/2");
    CHECK(to_string(Rational(5)) == "5");
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK(rpow(Rational(2, 3), -2) == Rational(9, 4));
  }

  TEST_CASE("product truncates to the shorter order") {
    QSeries a = from({1, 1}), b = from({1, -1, 0});
    QSeries c = a * b;
    CHECK(c.order() == 1);
    CHECK(from({1, 1, 0}) * from({1, -1, 0}) == from({1, 0, -1}));
    CHECK((from({1, 2, 3}) * QSeries(2)).is_zero());
  }

  TEST_CASE("division") {
    QSeries geo = series_div(QSeries::constant(1, 6), from({1, -1, 0, 0, 0, 0, 0}));
    CHECK(geo == from({1, 1, 1, 1, 1, 1, 1}));
    CHECK_THROWS_AS(series_div(from({1, 1}), from({0, 1})), PreconditionError);
    QSeries pg = partition_gf(10);
    CHECK(series_div(pg, pg) == QSeries::constant(1, 10));
  }

  TEST_CASE("partition generating function and Euler product") {
    QSeries pg = partition_gf(12);
    for (int n = 0; n <= 12; ++n) CHECK(pg[n] == count_partitions(n, n));
    CHECK(pg.truncated(5) == from({1, 1, 2, 3, 5, 7}));
    CHECK(pg * euler_product(12) == QSeries::constant(1, 12));
  }

  TEST_CASE("dq") {
    CHECK(dq(QSeries::constant(1, 3)).is_zero());
    CHECK(dq(from({0, 1, 3})) == from({0, 1, 6}));
  }

  TEST_CASE("ring axioms and Leibniz rule") {
    std::mt19937 rng(7);
    for (int t = 0; t < 10; ++t) {
      QSeries a = random_series(rng, 12), b = random_series(rng, 12), c = random_series(rng, 12);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a * b == b * a);
      CHECK(dq(a * b) == dq(a) * b + a * dq(b));
      if (b[0] != 0) CHECK(series_div(a * b, b) == a);
    }
  }

  TEST_CASE("first difference and serialization") {
    CHECK(!first_difference(from({1, 2}), from({1, 2, 3})).has_value());
    CHECK(*first_difference(from({1, 2}), from({1, 5})) == 1);
    auto v = serialize(from({0, 0, 0}));
    CHECK(v == std::vector<std::string>{"0", "0", "0"});
  }
}
