#include "doctest.h"
#include "torcov/errors.hpp"
#include "torcov/partitions.hpp"
#include "torcov/qmpoly.hpp"
#include "torcov/hurwitz.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

using namespace torcov;

namespace {

// class sizes by counting permutations of each cycle type
std::map<Partition, long> class_census(int d) {
  std::vector<int> p(d);
  std::iota(p.begin(), p.end(), 0);
  std::map<Partition, long> out;
  do {
    std::vector<char> seen(d, 0);
    Partition t;
    for (int x = 0; x < d; ++x) {
      if (seen[x]) continue;
      int len = 0;
      for (int y = x; !seen[y]; y = p[y]) seen[y] = 1, ++len;
      t.push_back(len);
    }
    std::sort(t.rbegin(), t.rend());
    ++out[t];
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

Rational t_p_characters(const Partition& lambda, int p) {
  const int d = psize(lambda);
  Rational s = 0;
  for (const auto& tau : partitions_of(d)) {
    Integer chi = char_value(lambda, tau);
    s += Rational(class_size(tau, d) * chi * chi) * sv_weight(tau, p);
  }
  return s / Rational(factorial(d));
}

}  // namespace

TEST_SUITE("partitions") {
  TEST_CASE("enumeration") {
    CHECK(partitions_of(0).size() == 1);
    CHECK(partitions_of(0)[0].empty());
    CHECK(partitions_of(4).size() == 5);
    CHECK(partitions_of(10).size() == 42);
    auto ps = partitions_of(8);
    std::set<Partition> uniq(ps.begin(), ps.end());
    CHECK(uniq.size() == ps.size());
  }

  TEST_CASE("class sizes against a census") {
    for (int d = 1; d <= 6; ++d)
      for (const auto& [type, count] : class_census(d)) CHECK(class_size(type, d) == count);
    CHECK(class_size({2}, 3) == 3);
    CHECK(class_size({3}, 3) == 2);
    CHECK(class_size({}, 5) == 1);
    CHECK(class_size({4}, 3) == 0);
  }

  TEST_CASE("characters") {
    for (int d = 1; d <= 6; ++d)
      for (const auto& s : partitions_of(d)) {
        CHECK(char_value({d}, s) == 1);
        const int sign = (d - plength(s)) % 2 ? -1 : 1;
        CHECK(char_value(Partition(d, 1), s) == sign);
      }
    CHECK(char_value({2, 1}, {3}) == -1);
    CHECK(char_value({2, 1}, {}) == 2);  // identity class after completion
    CHECK_THROWS_AS(char_value({2, 1}, {4}), PreconditionError);
  }

  TEST_CASE("orthogonality of columns") {
    for (int d = 1; d <= 7; ++d)
      for (const auto& s : partitions_of(d))
        for (const auto& t : partitions_of(d)) {
          Integer acc = 0;
          for (const auto& l : partitions_of(d)) acc += char_value(l, s) * char_value(l, t);
          CHECK(acc == (s == t ? Integer(centralizer_order(s)) : Integer(0)));
        }
  }

  TEST_CASE("dimensions") {
    CHECK(dim_irrep({5}) == 1);
    CHECK(dim_irrep({2, 1}) == 2);
    CHECK(dim_irrep({2, 2}) == 2);
    for (int d = 0; d <= 8; ++d)
      for (const auto& l : partitions_of(d)) CHECK(dim_irrep(l) == char_value(l, Partition(d, 1)));
  }

  TEST_CASE("shifted symmetric functions") {
    for (int d = 0; d <= 8; ++d)
      for (const auto& l : partitions_of(d)) {
        const Rational P1 = P_ell(1, l), P2 = P_ell(2, l), P3 = P_ell(3, l);
        CHECK(f_mu({1}, l) == d);
        CHECK(P1 == d);
        CHECK(f_mu({2}, l) == P2 / 2);
        CHECK(f_mu({3}, l) == Rational(1, 3) * P3 - Rational(1, 2) * P1 * P1 + Rational(5, 12) * P1);
        CHECK(p_ell(3, l) - p_ell(3, {}) == P3);
      }
    CHECK(P_ell(4, {}) == 0);
    CHECK(P_ell(2, {2, 1}) == Rational(9, 4) - Rational(1, 4) + Rational(1, 4) - Rational(9, 4));
    CHECK(p_ell(1, {}) == Rational(-1, 24));
    CHECK(p_ell(2, {}) == 0);
    CHECK(f_mu({3}, {2}) == 0);
  }

  TEST_CASE("hook moments") {
    CHECK(t_p({}, 1) == 0);
    for (int d = 1; d <= 5; ++d)
      for (const auto& l : partitions_of(d)) {
        CHECK(t_p(l, 1) == d);
        for (int p : {-1, 1, 3}) CHECK(t_p(l, p) == t_p_characters(l, p));
      }
  }

  TEST_CASE("Siegel-Veech weight") {
    CHECK(sv_weight({3, 2}, 0) == 2);
    CHECK(sv_weight({3, 2}, 1) == 5);
    CHECK(sv_weight({2, 2, 1}, -1) == 2);
  }

  TEST_CASE("q-bracket") {
    CHECK(q_bracket([](const Partition&) { return Rational(1); }, 8) == QSeries::constant(1, 8));
    QSeries b = q_bracket([](const Partition& l) -> Rational { return f_mu({2}, l) * f_mu({2}, l); }, 10);
    CHECK(b == n_prime_series(parse_profile("(2),(2)"), 10));
    QSeries p2 = q_bracket([](const Partition& l) { return p_ell(2, l); }, 20);
    QMPoly fit = fit_quasimodular(p2, 3);
    CHECK(fit.max_weight() <= 2);
  }

  TEST_CASE("profiles") {
    CHECK(parse_profile("").empty());
    Profile p = parse_profile("(2,1,1),(3)");
    CHECK(to_string(p) == "(2),(3)");
    CHECK(to_string(canonical(parse_profile("(3,2),(2)"))) == "(2),(3,2)");
    CHECK_THROWS_AS(parse_profile("(1)"), ParseError);
    CHECK_THROWS_AS(parse_profile("(2"), ParseError);
    CHECK_THROWS_AS(parse_profile("2"), ParseError);
    CHECK(profile_weight(parse_profile("(2),(2)")) == 6);
  }
}
