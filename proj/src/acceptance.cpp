#include "torcov/acceptance.hpp"

#include <chrono>
#include <random>
#include <sstream>

#include "torcov/elliptic.hpp"
#include "torcov/errors.hpp"
#include "torcov/graph.hpp"
#include "torcov/hurwitz.hpp"
#include "torcov/partitions.hpp"
#include "torcov/qmpoly.hpp"
#include "torcov/series.hpp"
#include "torcov/siegel_veech.hpp"
#include "torcov/triple.hpp"

namespace torcov {

namespace {

// Collects failed sub-checks of one criterion.
class Checker {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok) fails_.push_back(what);
  }
  void expect_eq(const QSeries& got, const QSeries& want, const std::string& what) {
    if (got == want) return;
    auto d = first_difference(got, want);
    std::ostringstream os;
    os << what << ": differs at q^" << (d ? *d : -1);
    if (d) os << " (" << to_string(got[*d]) << " vs " << to_string(want[*d]) << ")";
    fails_.push_back(os.str());
  }
  void expect_eq(const QMPoly& got, const QMPoly& want, const std::string& what) {
    if (!(got == want)) fails_.push_back(what + ": got " + got.to_string());
  }
  // Runs f, turning exceptions into failures.
  template <class F>
  void guard(const std::string& what, F&& f) {
    try {
      f();
    } catch (const std::exception& e) {
      fails_.push_back(what + ": " + e.what());
    }
  }
  std::string detail() const {
    std::string s;
    for (const auto& f : fails_) s += (s.empty() ? "" : "; ") + f;
    return s;
  }
  bool ok() const { return fails_.empty(); }

 private:
  std::vector<std::string> fails_;
};

Rational frac(long a, long b) {
  Rational r(a, b);
  r.canonicalize();
  return r;
}

QSeries poly_series(const std::vector<long>& c) {
  QSeries s(static_cast<int>(c.size()) - 1);
  for (size_t i = 0; i < c.size(); ++i) s[i] = c[i];
  return s;
}

QMPoly without_constant(QMPoly p) {
  p -= QMPoly::constant(p.coeff({0, 0, 0}));
  return p;
}

void crit_connected_22(Checker& ck) {
  const Profile pr = parse_profile("(2),(2)");
  const int order = fit_min_order(6);
  QSeries s = n_connected_series(pr, order);
  ck.expect_eq(s.truncated(8), poly_series({0, 0, 2, 16, 60, 160, 360, 672, 1240}), "N°((2),(2)) to q^8");
  ck.guard("fit", [&] {
    ck.expect_eq(fit_quasimodular(s, 6), QMPoly::parse("-8/3*G2^3 + 2/3*G4*G2 + 7/180*G6"), "fit");
  });
}

void crit_three(Checker& ck) {
  const Profile pr = parse_profile("(3)");
  const int order = std::max(12, fit_min_order(4));
  QSeries s = n_connected_series(pr, order);
  ck.guard("fit", [&] {
    ck.expect_eq(without_constant(fit_quasimodular(s, 4)), QMPoly::parse("3/2*G2^2 - 1/4*G4 + 3/8*G2"),
                 "non-constant part of N°((3))");
  });
  const QSeries S1 = sigma_series(1, order), S2 = sigma_series(2, order), S3 = sigma_series(3, order);
  const QSeries one_loop = Rational(1, 6) * S3 - Rational(1, 2) * S2 + Rational(1, 3) * S1;
  const QSeries two_loops = Rational(1, 2) * (S1 * S1 - dq(S1) + S2);
  QSeries total(order);
  int loops_seen = 0;
  for (const auto& c : per_graph_nprime(pr, order)) {
    QSeries v = (Rational(1) / Rational(c.aut)) * c.series;
    total += v;
    if (c.graph.to_string() == "1-1") {
      ck.expect_eq(v, one_loop, "one-loop graph");
      ++loops_seen;
    } else if (c.graph.to_string() == "1-1,1-1") {
      ck.expect_eq(v, two_loops, "two-loop graph");
      ++loops_seen;
    } else {
      ck.expect(v.is_zero(), "graph " + c.graph.to_string() + " should not contribute");
    }
  }
  ck.expect(loops_seen == 2, "both loop graphs enumerated");
  ck.expect_eq(total, s, "graph path total");
  // the S2 terms of the two graphs cancel
  ck.expect_eq(total, Rational(1, 6) * S3 + Rational(1, 3) * S1 + Rational(1, 2) * (S1 * S1 - dq(S1)), "S2 cancellation");
}

void crit_four_point(Checker& ck) {
  const int order = fit_min_order(12);
  const auto gA = GlobalGraph::parse("1-2,1-2,1-4,2-3,3-4,3-4");
  const auto gA2 = GlobalGraph::parse("1-4,1-4,1-2,2-3,2-3,3-4");
  const auto gB = GlobalGraph::parse("1-3,1-3,1-2,2-4,2-4,3-4");
  const auto gC = GlobalGraph::parse("1-2,1-3,1-4,2-3,2-4,3-4");
  const EdgeExponents m0(6, 0);
  QSeries A = constant_term_graph(gA, m0, order);
  QSeries B = constant_term_graph(gB, m0, order);
  QSeries C = constant_term_graph(gC, m0, order);
  ck.expect_eq(A, graph_sum_S_total(gA, m0, order), "A: constant term vs direct sum");
  ck.expect_eq(B, graph_sum_S_total(gB, m0, order), "B: constant term vs direct sum");
  ck.expect_eq(C, graph_sum_S_total(gC, m0, order), "C: constant term vs direct sum");
  ck.expect_eq(constant_term_graph(gA2, m0, order), A, "second labeling gives A");
  ck.expect_eq(A.truncated(8), poly_series({0, 0, 4, 224, 3088, 21888, 105136, 388288, 1197280}), "A to q^8");
  ck.expect_eq(B.truncated(8), poly_series({0, 0, 0, 0, 40, 448, 2848, 11776, 41744}), "B to q^8");
  const QMPoly w12 = QMPoly::parse(
      "-256*G2^6 + 640/3*G4*G2^4 + 112/9*G6*G2^3 - 400/9*G4^2*G2^2 - 140/9*G6*G4*G2 + 2000/81*G4^3 + 49/108*G6^2");
  const QMPoly a10 = QMPoly::parse("-256/3*G4*G2^3 - 16/5*G6*G2^2 + 320/21*G4^2*G2 + 28/9*G6*G4");
  const QMPoly b10 = QMPoly::parse("128/3*G4*G2^3 + 8/5*G6*G2^2 - 160/21*G4^2*G2 - 14/9*G6*G4");
  ck.guard("fits", [&] {
    QMPoly fa = fit_quasimodular(A, 12), fb = fit_quasimodular(B, 12), fc = fit_quasimodular(C, 12);
    ck.expect_eq(fa, w12 + a10, "A closed form");
    ck.expect_eq(fb, w12 + b10, "B closed form");
    ck.expect_eq(fc, QMPoly::parse("-384*G2^6 + 480*G4*G2^4 - 200*G4^2*G2^2 + 250/9*G4^3"), "C closed form");
    ck.expect(fa.weight_part(12) == fb.weight_part(12), "weight 12 parts of A and B coincide");
    ck.expect(fa.weight_part(10) == Rational(-2) * fb.weight_part(10), "weight 10 part of A is -2 times that of B");
  });
  const int low = 8;
  QSeries total = Rational(1, 4) * (Rational(2) * A.truncated(low) + Rational(4) * B.truncated(low)) + C.truncated(low);
  ck.expect_eq(total, poly_series({0, 0, 2, 160, 2448, 18304, 90552, 341568, 1068928}), "(2A+4B)/4 + C to q^8");
  ck.expect_eq(total, n_connected_series(parse_profile("(2),(2),(2),(2)"), low), "(2A+4B)/4 + C vs N°((2)^4)");
}

void crit_sv(Checker& ck) {
  const Profile pr = parse_profile("(2),(2)");
  const int order = std::max(12, fit_min_order(6));
  QSeries c = c_connected_series(pr, -1, order);
  ck.guard("fit", [&] {
    ck.expect_eq(fit_quasimodular(c, 6), QMPoly::parse("-10/3*G2^3 + 5/6*G4*G2 + 7/144*G6"), "c°((2),(2)) fit");
  });
  ck.expect_eq(c, Rational(5, 4) * n_connected_series(pr, order), "c° = 5/4 N°");
  ck.expect_eq(c, c_prime_series(pr, -1, order), "c° = c'");
  const auto Z = fourier_expansion(EllipticKind::Z, order, order);
  const auto P = fourier_expansion(EllipticKind::P, order, order);
  const auto Ph = add_constant(Rational(1, 2) * P, qm_to_series(QMPoly::parse("-G2 + 1/12"), order));
  QSeries z2p2 = constant_term_product({Z, Z, P, P}, order);
  QSeries php2 = constant_term_product({Ph, P, P}, order);
  ck.guard("identities", [&] {
    ck.expect_eq(fit_quasimodular(z2p2, 6),
                 QMPoly::parse("16/3*G2^3 - 2/3*G2^2 - 8/3*G4*G2 + 5/18*G4 + 7/180*G6"), "[z^0] Z^2 P^2");
    ck.expect_eq(fit_quasimodular(php2, 6),
                 QMPoly::parse("-4*G2^3 - 1/3*G2^2 + 1/3*G4*G2 + 5/36*G4 + 7/60*G6"), "[z^0] (P/2 - G2 + 1/12) P^2");
  });
  const auto g = GlobalGraph::parse("1-2,1-2,1-2");
  const EdgeExponents m0(3, 0);
  QSeries lp2 = sv_constant_term(g, m0, 0, order);
  ck.expect_eq(lp2, php2 - Rational(1, 2) * z2p2, "[z^0] L P^2 via the L identity");
  ck.expect_eq(Rational(1, 2) * lp2, c, "c° = (1/2) [z^0] L P^2");
  QSeries all_i0 = sv_graph_sum_total(g, m0, order);
  ck.expect_eq(Rational(1, 6) * all_i0, c, "c° = (1/6) sum over marked edges");
  ck.expect_eq(sv_graph_sum_total(g, m0, order, 0), lp2, "marked-edge direct sum vs constant term");
}

void crit_zconst(Checker& ck) {
  const std::vector<std::string> want = {
      "1/2",
      "-2*G2 + 1/6",
      "-3*G2",
      "8*G2^2 - 1/3*G4 - 2*G2 - 1/30",
      "20*G2^2 - 5/6*G4",
      "-1/60*G6 + 4*G4*G2 - 40*G2^3 + 20*G2^2 - 5/6*G4 + G2 + 1/42",
  };
  for (int e = 1; e <= 6; ++e) {
    const std::string tag = "e=" + std::to_string(e);
    ck.guard(tag, [&] {
      const int order = fit_min_order(e);
      ck.expect_eq(zeta0_Z_power(e, order), QMPoly::parse(want[e - 1]), tag + " symbolic");
      ck.expect_eq(fit_quasimodular(zeta0_Z_power_series(e, order), e), QMPoly::parse(want[e - 1]), tag + " Fourier fit");
    });
  }
}

void crit_oracles(Checker& ck) {
  struct Case {
    const char* profile;
    int max_d;
  };
  for (const Case& cs : {Case{"(3)", 6}, Case{"(2),(2)", 5}}) {
    const Profile pr = parse_profile(cs.profile);
    for (Variant v : {Variant::all, Variant::prime, Variant::connected}) {
      QSeries s = n_variant_series(pr, cs.max_d, v);
      for (int d = 0; d <= cs.max_d; ++d) {
        const std::string tag = std::string(cs.profile) + " " + to_string(v) + " d=" + std::to_string(d);
        ck.guard(tag, [&] { ck.expect(brute_force_n(pr, d, v) == s[d], tag); });
      }
    }
  }
  const Profile pr = parse_profile("(2),(2)");
  for (int p : {-1, 1}) {
    for (Variant v : {Variant::all, Variant::prime, Variant::connected}) {
      QSeries s = c_variant_series(pr, p, 4, v);
      for (int d = 0; d <= 4; ++d) {
        const std::string tag = "SV p=" + std::to_string(p) + " " + to_string(v) + " d=" + std::to_string(d);
        ck.guard(tag, [&] { ck.expect(brute_force_sv(pr, d, p, v) == s[d], tag); });
      }
    }
  }
}

// Loopless graphs on 2..4 vertices with at most 6 edges.
std::vector<GlobalGraph> path_test_graphs() {
  std::vector<GlobalGraph> out;
  for (const auto& bounds : std::vector<std::vector<int>>{{4, 4}, {3, 3, 3}, {3, 3, 3, 3}}) {
    for (const auto& g : enumerate_graphs(bounds)) {
      bool loops = false;
      for (int e = 0; e < g.edge_count(); ++e) loops = loops || g.is_loop(e);
      if (!loops && g.edge_count() <= 6) out.push_back(g);
    }
  }
  return out;
}

void crit_paths(Checker& ck) {
  const int order = 10;
  for (const auto& g : path_test_graphs()) {
    EdgeExponents m(g.edge_count(), 0);
    ck.expect_eq(constant_term_graph(g, m, order), graph_sum_S_total(g, m, order), "graph " + g.to_string());
    m[0] = 2;
    ck.expect_eq(constant_term_graph(g, m, order), graph_sum_S_total(g, m, order), "graph " + g.to_string() + " m0=2");
  }
  for (const char* p : {"(3)", "(4)", "(2),(2)", "(2,2)", "(2),(2),(2),(2)"}) {
    const Profile pr = parse_profile(p);
    ck.expect_eq(assemble_total(pr, order), n_prime_series(pr, order), std::string("assemble ") + p);
  }
}

void crit_properties(Checker& ck) {
  // character orthogonality
  for (int d = 0; d <= 7; ++d) {
    const auto& parts = partitions_of(d);
    for (const auto& s : parts)
      for (const auto& t : parts) {
        Integer acc = 0;
        for (const auto& l : parts) acc += Integer(char_value(l, s)) * Integer(char_value(l, t));
        const Integer want = s == t ? Integer(factorial(d) / class_size(s, d)) : Integer(0);
        if (acc != want) ck.expect(false, "orthogonality d=" + std::to_string(d) + " " + to_string(s) + "," + to_string(t));
      }
  }
  // f_mu conversions
  for (int d = 0; d <= 8; ++d)
    for (const auto& l : partitions_of(d)) {
      const Rational P1 = P_ell(1, l), P2 = P_ell(2, l), P3 = P_ell(3, l), P4 = P_ell(4, l), P5 = P_ell(5, l);
      const Rational f3 = Rational(1, 3) * P3 - Rational(1, 2) * P1 * P1 + Rational(5, 12) * P1;
      const Rational f4 = Rational(1, 4) * P4 - P1 * P2 + Rational(11, 8) * P2;
      const Rational f5 = Rational(1, 5) * P5 - P3 * P1 - Rational(1, 2) * P2 * P2 + Rational(5, 6) * P1 * P1 * P1 -
                          Rational(15, 4) * P1 * P1 + Rational(19, 6) * P3 + Rational(189, 80) * P1;
      if (f_mu({3}, l) != f3) ck.expect(false, "f3 at " + to_string(l));
      if (f_mu({4}, l) != f4) ck.expect(false, "f4 at " + to_string(l));
      if (f_mu({5}, l) != f5) ck.expect(false, "f5 at " + to_string(l));
    }
  // global polynomiality
  for (auto [m, n, ell] : std::vector<std::tuple<int, int, int>>{{1, 1, 3}, {1, 2, 2}, {1, 2, 4}, {2, 2, 5}}) {
    const std::string tag = "SSZ (" + std::to_string(m) + "," + std::to_string(n) + "," + std::to_string(ell) + ")";
    ck.guard(tag, [&] {
      SszReport r = ssz_poly_fit(m, n, ell, 6);
      ck.expect(r.ok && r.poly.even(), tag + ": " + r.message);
      // walls exist once both sides have two or more widths
      if (m >= 2 && n >= 2) ck.expect(r.wall_points > 0, tag + ": no wall points checked");
    });
  }
  // parity vanishing
  std::vector<WidthTuple> tuples;
  std::function<void(WidthTuple&, int)> grow = [&](WidthTuple& t, int left) {
    if (!t.empty()) tuples.push_back(t);
    for (int x = 1; x <= left && t.size() < 3; ++x) {
      t.push_back(x);
      grow(t, left - x);
      t.pop_back();
    }
  };
  WidthTuple t;
  grow(t, 8);
  for (const auto& a : tuples)
    for (const auto& b : tuples) {
      if (psize(a) != psize(b)) continue;
      for (int ell = 1; ell <= 5; ++ell)
        if ((ell + 1 - static_cast<int>(a.size() + b.size())) % 2 != 0 && abar_prime(a, b, ell) != 0)
          ck.expect(false, "abar_prime parity at ell=" + std::to_string(ell));
    }
  // Leibniz rule and fit round trips on pseudo-random data
  std::mt19937 rng(20240611);
  std::uniform_int_distribution<int> coef(-9, 9);
  for (int trial = 0; trial < 5; ++trial) {
    QSeries a(20), b(20);
    for (int i = 0; i <= 20; ++i) {
      a[i] = frac(coef(rng), 1 + (coef(rng) + 9) % 4);
      b[i] = coef(rng);
    }
    ck.expect_eq(dq(a * b), dq(a) * b + a * dq(b), "Leibniz");
  }
  for (int w = 0; w <= 12; w += 2) {
    QMPoly p;
    for (const auto& mono : qm_basis(w)) {
      const int c = coef(rng);
      if (c) p.add_term(mono, frac(c, 1 + (coef(rng) + 9) % 5));
    }
    ck.guard("round trip", [&] {
      ck.expect_eq(fit_quasimodular(qm_to_series(p, fit_min_order(12)), 12), p, "round trip weight " + std::to_string(w));
    });
  }
}

}  // namespace

std::vector<CheckResult> run_acceptance(const std::function<void(const CheckResult&)>& on_result) {
  using Fn = void (*)(Checker&);
  const std::vector<std::pair<std::string, Fn>> criteria = {
      {"1 connected count (2),(2) and its closed form", crit_connected_22},
      {"2 count (3): closed form and graph decomposition", crit_three},
      {"3 four-point graphs A, B, C and N°((2)^4)", crit_four_point},
      {"4 Siegel-Veech count for (2),(2)", crit_sv},
      {"5 constant terms of Z^e, e=1..6", crit_zconst},
      {"6 brute-force oracles", crit_oracles},
      {"7 constant term vs graph sum, graph assembly vs Burnside", crit_paths},
      {"8 property suites", crit_properties},
  };
  std::vector<CheckResult> out;
  for (const auto& [name, fn] : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    Checker ck;
    ck.guard("unexpected", [&] { fn(ck); });
    CheckResult r{name, ck.ok(), ck.detail(),
                  std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count()};
    if (on_result) on_result(r);
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace torcov
