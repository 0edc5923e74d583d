#include "torcov/triple.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <tuple>

#include "torcov/errors.hpp"
#include "torcov/linalg.hpp"

namespace torcov {

VertexFunction VertexFunction::f(const Partition& mu) {
  VertexFunction F;
  F.kind = Kind::f_mu;
  F.mu = sorted_partition(mu);
  return F;
}

VertexFunction VertexFunction::completed(int ell) {
  if (ell < 1) throw PreconditionError("completed cycle needs ell >= 1");
  VertexFunction F;
  F.kind = Kind::completed;
  F.ell = ell;
  return F;
}

VertexFunction VertexFunction::power(const Partition& mu) {
  VertexFunction F;
  F.kind = Kind::power_sum;
  F.mu = sorted_partition(mu);
  return F;
}

VertexFunction VertexFunction::one() { return VertexFunction{}; }

Rational VertexFunction::operator()(const Partition& lambda) const {
  switch (kind) {
    case Kind::f_mu: return f_mu(mu, lambda);
    case Kind::completed: return P_ell(ell, lambda) / ell;
    case Kind::power_sum: {
      Rational v = 1;
      for (int x : mu) v *= P_ell(x, lambda);
      return v;
    }
    case Kind::one: return 1;
  }
  return 0;
}

std::string VertexFunction::key() const {
  switch (kind) {
    case Kind::f_mu: return "f" + to_string(mu);
    case Kind::completed: return "P" + std::to_string(ell) + "/" + std::to_string(ell);
    case Kind::power_sum: return "P" + to_string(mu);
    case Kind::one: return "1";
  }
  return "?";
}

namespace {

using Key = std::tuple<WidthTuple, WidthTuple, std::string>;

struct Memo {
  std::shared_mutex mu;
  std::map<Key, Rational> values;

  bool get(const Key& k, Rational& out) {
    std::shared_lock lock(mu);
    auto it = values.find(k);
    if (it == values.end()) return false;
    out = it->second;
    return true;
  }
  void put(Key k, const Rational& v) {
    std::unique_lock lock(mu);
    values.emplace(std::move(k), v);
  }
};

Memo& a_memo() {
  static Memo m;
  return m;
}
Memo& aprime_memo() {
  static Memo m;
  return m;
}

WidthTuple sorted_desc(WidthTuple w) {
  std::sort(w.begin(), w.end(), std::greater<>());
  return w;
}

Rational product(const WidthTuple& w) {
  Integer p = 1;
  for (int x : w) p *= x;
  return Rational(p);
}

// A(x, y, 1) by orthogonality: delta_{x ~ y} prod m_k! / prod y.
Rational a_one(const WidthTuple& x, const WidthTuple& y) {
  if (x != y) return 0;  // both sorted
  std::map<int, int> mult;
  for (int v : y) ++mult[v];
  Integer f = 1;
  for (auto [k, m] : mult) f *= factorial(static_cast<unsigned>(m));
  return Rational(f) / product(y);
}

}  // namespace

Rational a_number(const WidthTuple& wm, const WidthTuple& wp, const VertexFunction& F) {
  for (int x : wm)
    if (x < 1) throw PreconditionError("widths must be positive");
  for (int x : wp)
    if (x < 1) throw PreconditionError("widths must be positive");
  const int d = std::accumulate(wm.begin(), wm.end(), 0);
  if (d != std::accumulate(wp.begin(), wp.end(), 0)) return 0;
  WidthTuple a = sorted_desc(wm), b = sorted_desc(wp);
  if (b < a) std::swap(a, b);
  Key key{a, b, F.key()};
  Rational v;
  if (a_memo().get(key, v)) return v;
  Rational sum = 0;
  for (const auto& lam : partitions_of(d)) {
    Integer ca = char_value(lam, a);
    if (ca == 0) continue;
    Integer cb = char_value(lam, b);
    if (cb == 0) continue;
    Rational fv = F(lam);
    if (fv == 0) continue;
    sum += Rational(ca * cb) * fv;
  }
  v = sum / (product(a) * product(b));
  a_memo().put(std::move(key), v);
  return v;
}

Rational a_prime(const WidthTuple& wm, const WidthTuple& wp, const VertexFunction& F) {
  const int d = std::accumulate(wm.begin(), wm.end(), 0);
  if (d != std::accumulate(wp.begin(), wp.end(), 0)) return 0;
  WidthTuple a = sorted_desc(wm), b = sorted_desc(wp);
  if (b < a) std::swap(a, b);
  Key key{a, b, F.key()};
  Rational v;
  if (aprime_memo().get(key, v)) return v;

  // A(w-, w+, F) = sum over index subsets u- of w-, u+ of w+ with |u-| = |u+|
  // of A'(u-, u+, F) A(rest-, rest+, 1); solve for the full-subset term.
  const int m = plength(a), n = plength(b);
  v = a_number(a, b, F);
  const unsigned full_a = (1u << m) - 1, full_b = (1u << n) - 1;
  for (unsigned sa = 0; sa <= full_a; ++sa) {
    WidthTuple ua, ra;
    for (int i = 0; i < m; ++i) ((sa >> i) & 1 ? ua : ra).push_back(a[i]);
    const int su = std::accumulate(ua.begin(), ua.end(), 0);
    for (unsigned sb = 0; sb <= full_b; ++sb) {
      if (sa == full_a && sb == full_b) continue;
      WidthTuple ub, rb;
      for (int i = 0; i < n; ++i) ((sb >> i) & 1 ? ub : rb).push_back(b[i]);
      if (std::accumulate(ub.begin(), ub.end(), 0) != su) continue;
      Rational rest = a_one(ra, rb);
      if (rest == 0) continue;
      v -= a_prime(ua, ub, F) * rest;
    }
  }
  aprime_memo().put(std::move(key), v);
  return v;
}

Rational abar_prime(const WidthTuple& wm, const WidthTuple& wp, int ell) {
  return a_prime(wm, wp, VertexFunction::completed(ell));
}

// ---- polynomiality ----

namespace {

void monomials_up_to(int vars, int degree, std::vector<std::vector<int>>& out) {
  std::vector<int> e(vars, 0);
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == vars) {
      out.push_back(e);
      return;
    }
    for (int k = 0; k <= left; ++k) {
      e[i] = k;
      rec(i + 1, left - k);
    }
    e[i] = 0;
  };
  rec(0, degree);
  std::stable_sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    int dx = std::accumulate(x.begin(), x.end(), 0), dy = std::accumulate(y.begin(), y.end(), 0);
    if (dx != dy) return dx > dy;
    return x > y;
  });
}

std::vector<int> free_vars(int m, int n, const WidthTuple& wm, const WidthTuple& wp) {
  std::vector<int> x(wm.begin(), wm.end());
  x.insert(x.end(), wp.begin(), wp.begin() + (n - 1));
  (void)m;
  return x;
}

Rational eval_monomial(const std::vector<int>& e, const std::vector<int>& x) {
  Rational r = 1;
  for (size_t i = 0; i < e.size(); ++i) r *= rpow(Rational(x[i]), e[i]);
  return r;
}

bool on_wall(const WidthTuple& wm, const WidthTuple& wp) {
  const int m = plength(wm), n = plength(wp);
  for (unsigned sa = 1; sa < (1u << m); ++sa) {
    int s = 0;
    for (int i = 0; i < m; ++i)
      if ((sa >> i) & 1) s += wm[i];
    for (unsigned sb = 1; sb < (1u << n); ++sb) {
      if (sa == (1u << m) - 1 && sb == (1u << n) - 1) continue;
      int t = 0;
      for (int j = 0; j < n; ++j)
        if ((sb >> j) & 1) t += wp[j];
      if (s == t) return true;
    }
  }
  return false;
}

}  // namespace

Rational SszPolynomial::eval(const WidthTuple& wm, const WidthTuple& wp) const {
  auto x = free_vars(m, n, wm, wp);
  Rational r = 0;
  for (size_t i = 0; i < exponents.size(); ++i) r += coeffs[i] * eval_monomial(exponents[i], x);
  return r;
}

bool SszPolynomial::even() const {
  for (size_t i = 0; i < exponents.size(); ++i) {
    if (coeffs[i] == 0) continue;
    int deg = std::accumulate(exponents[i].begin(), exponents[i].end(), 0);
    if ((degree - deg) % 2 != 0) return false;
  }
  return true;
}

std::string SszPolynomial::to_string() const {
  std::string out;
  for (size_t i = 0; i < exponents.size(); ++i) {
    const Rational& c = coeffs[i];
    if (c == 0) continue;
    std::string mono;
    for (size_t k = 0; k < exponents[i].size(); ++k) {
      int e = exponents[i][k];
      if (e == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += (static_cast<int>(k) < m ? "u" + std::to_string(k + 1) : "v" + std::to_string(k - m + 1));
      if (e > 1) mono += "^" + std::to_string(e);
    }
    Rational mag = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (mono.empty()) out += torcov::to_string(mag);
    else if (mag == 1) out += mono;
    else out += torcov::to_string(mag) + "*" + mono;
  }
  return out.empty() ? "0" : out;
}

SszReport ssz_poly_fit(int m, int n, int ell, int radius) {
  if (m < 1 || n < 1 || ell < 1 || radius < 1) throw PreconditionError("ssz_poly_fit: arguments must be positive");
  const int D = ell + 1 - m - n;
  if (D < 0 || D % 2 != 0)
    throw PreconditionError("ssz_poly_fit: ell+1-m-n = " + std::to_string(D) + " must be even and >= 0");

  SszReport rep;
  rep.poly.m = m;
  rep.poly.n = n;
  rep.poly.ell = ell;
  rep.poly.degree = D;
  const int k = m + n - 1;
  monomials_up_to(k, D, rep.poly.exponents);

  struct Point {
    WidthTuple wm, wp;
    Rational value;
  };
  std::vector<Point> interior, walls;
  std::vector<int> x(k, 1);
  std::function<void(int)> rec = [&](int i) {
    if (i == k) {
      WidthTuple wm(x.begin(), x.begin() + m);
      WidthTuple wp(x.begin() + m, x.end());
      int last = std::accumulate(wm.begin(), wm.end(), 0) - std::accumulate(wp.begin(), wp.end(), 0);
      if (last < 1 || last > radius) return;
      wp.push_back(last);
      Point p{wm, wp, abar_prime(wm, wp, ell)};
      (on_wall(wm, wp) ? walls : interior).push_back(std::move(p));
      return;
    }
    for (int v = 1; v <= radius; ++v) {
      x[i] = v;
      rec(i + 1);
    }
  };
  rec(0);

  auto build = [&](const std::vector<const Point*>& pts, std::vector<std::vector<Rational>>& rows,
                   std::vector<Rational>& rhs) {
    for (const Point* p : pts) {
      auto fx = free_vars(m, n, p->wm, p->wp);
      std::vector<Rational> row;
      for (const auto& e : rep.poly.exponents) row.push_back(eval_monomial(e, fx));
      rows.push_back(std::move(row));
      rhs.push_back(p->value);
    }
  };

  std::vector<const Point*> fit_pts;
  for (const auto& p : interior) fit_pts.push_back(&p);
  std::vector<std::vector<Rational>> rows;
  std::vector<Rational> rhs;
  build(fit_pts, rows, rhs);
  try {
    try {
      rep.poly.coeffs = solve_exact(rows, rhs);
    } catch (const UnderdeterminedError&) {
      // too few chamber points: fit on everything
      rep.used_walls_for_fit = true;
      for (const auto& p : walls) fit_pts.push_back(&p);
      rows.clear();
      rhs.clear();
      build(fit_pts, rows, rhs);
      rep.poly.coeffs = solve_exact(rows, rhs);
    }
  } catch (const NoSolutionError& e) {
    rep.witness_minus = fit_pts[e.witness]->wm;
    rep.witness_plus = fit_pts[e.witness]->wp;
    rep.message = "no polynomial of degree " + std::to_string(D) + " fits";
    rep.poly.coeffs.assign(rep.poly.exponents.size(), 0);
    return rep;
  } catch (const UnderdeterminedError& e) {
    rep.message = std::string("grid too small: ") + e.what();
    rep.poly.coeffs.assign(rep.poly.exponents.size(), 0);
    return rep;
  }
  rep.fit_points = static_cast<int>(fit_pts.size());
  rep.wall_points = static_cast<int>(walls.size());
  for (const auto& p : walls) {
    if (rep.poly.eval(p.wm, p.wp) != p.value) {
      rep.witness_minus = p.wm;
      rep.witness_plus = p.wp;
      rep.message = "wall point disagrees with the chamber polynomial";
      return rep;
    }
  }
  if (!rep.poly.even()) {
    rep.message = "polynomial is not even";
    return rep;
  }
  rep.ok = true;
  return rep;
}

}  // namespace torcov
