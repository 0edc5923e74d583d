#include "doctest.h"
#include "torcov/errors.hpp"
#include "torcov/triple.hpp"

using namespace torcov;

TEST_SUITE("triple") {
  TEST_CASE("orthogonality of the unramified count") {
    for (int w = 1; w <= 12; ++w) CHECK(a_number({w}, {w}, VertexFunction::one()) == Rational(1, w));
    CHECK(a_number({2, 2}, {2, 2}, VertexFunction::one()) == Rational(1, 2));
    CHECK(a_number({2, 1}, {2, 1}, VertexFunction::one()) == Rational(1, 2));
    CHECK(a_number({3}, {2}, VertexFunction::f({2})) == 0);
    CHECK(a_number({3}, {2, 1}, VertexFunction::one()) == 0);
  }

  TEST_CASE("single vertex values") {
    for (int w = 1; w <= 10; ++w) {
      CHECK(a_prime({w}, {w}, VertexFunction::f({3})) == Rational(w * w, 6) - Rational(w, 2) + Rational(1, 3));
      CHECK(abar_prime({w}, {w}, 3) == Rational(w * w, 6) - Rational(1, 12));
    }
    for (int a = 1; a <= 5; ++a)
      for (int b = 1; b <= 5; ++b) {
        CHECK(a_prime({a, b}, {a, b}, VertexFunction::f({3})) == (a == b ? 0 : 1));
        CHECK(abar_prime({a, b}, {a, b}, 3) == 2);
        CHECK(a_prime({a + b}, {a, b}, VertexFunction::f({2})) == 1);
        CHECK(a_prime({a + b}, {a, b}, VertexFunction::power({2})) == 2);
      }
  }

  TEST_CASE("linearity in the vertex function") {
    // f3 = P3/3 - P1^2/2 + 5/12 P1
    for (auto [wm, wp] : std::vector<std::pair<WidthTuple, WidthTuple>>{{{3}, {3}}, {{2, 1}, {2, 1}}, {{4}, {1, 3}}}) {
      Rational lhs = a_number(wm, wp, VertexFunction::f({3}));
      Rational rhs = Rational(1, 3) * a_number(wm, wp, VertexFunction::power({3})) -
                     Rational(1, 2) * a_number(wm, wp, VertexFunction::power({1, 1})) +
                     Rational(5, 12) * a_number(wm, wp, VertexFunction::power({1}));
      CHECK(lhs == rhs);
    }
  }

  TEST_CASE("parity vanishing") {
    std::vector<WidthTuple> ts = {{1}, {2}, {3}, {4}, {1, 1}, {1, 2}, {2, 2}, {1, 3}, {1, 1, 2}, {2, 1, 1}};
    for (const auto& a : ts)
      for (const auto& b : ts) {
        if (psize(a) != psize(b)) continue;
        for (int ell = 1; ell <= 5; ++ell)
          if ((ell + 1 - static_cast<int>(a.size() + b.size())) % 2) CHECK(abar_prime(a, b, ell) == 0);
        for (const Partition& mu : std::vector<Partition>{{2}, {3}, {2, 2}})
          if ((pweight(mu) - static_cast<int>(a.size() + b.size())) % 2) CHECK(a_prime(a, b, VertexFunction::f(mu)) == 0);
      }
  }

  TEST_CASE("global polynomiality") {
    SszReport r = ssz_poly_fit(1, 1, 3, 6);
    CHECK(r.ok);
    CHECK(r.poly.eval({4}, {4}) == Rational(16, 6) - Rational(1, 12));
    SszReport c = ssz_poly_fit(1, 2, 2, 6);
    CHECK(c.ok);
    CHECK(c.poly.degree == 0);
    CHECK(c.poly.eval({5}, {2, 3}) == 1);
    for (auto [m, n, ell] : std::vector<std::tuple<int, int, int>>{{1, 2, 4}, {2, 2, 5}, {2, 2, 3}}) {
      SszReport x = ssz_poly_fit(m, n, ell, 6);
      CHECK(x.ok);
      CHECK(x.poly.even());
    }
    CHECK(ssz_poly_fit(2, 2, 5, 6).wall_points > 0);
    CHECK_THROWS_AS(ssz_poly_fit(1, 1, 2, 6), PreconditionError);
  }
}
