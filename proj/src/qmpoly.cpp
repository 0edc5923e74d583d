#include "torcov/qmpoly.hpp"

#include <cctype>
#include <mutex>
#include <sstream>

#include "torcov/errors.hpp"
#include "torcov/linalg.hpp"

namespace torcov {

QMPoly QMPoly::constant(const Rational& v) {
  QMPoly p;
  p.add_term({}, v);
  return p;
}

QMPoly QMPoly::gen(int k) {
  QMPoly p;
  switch (k) {
    case 2: p.add_term({1, 0, 0}, 1); break;
    case 4: p.add_term({0, 1, 0}, 1); break;
    case 6: p.add_term({0, 0, 1}, 1); break;
    default: throw PreconditionError("QMPoly::gen: k must be 2, 4 or 6");
  }
  return p;
}

void QMPoly::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
    return;
  }
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

Rational QMPoly::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

int QMPoly::max_weight() const { return terms_.empty() ? 0 : terms_.rbegin()->first.weight(); }

QMPoly QMPoly::weight_part(int w) const {
  QMPoly p;
  for (const auto& [m, c] : terms_)
    if (m.weight() == w) p.terms_.emplace(m, c);
  return p;
}

QMPoly& QMPoly::operator+=(const QMPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

QMPoly& QMPoly::operator-=(const QMPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

QMPoly& QMPoly::operator*=(const Rational& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= s;
  return *this;
}

static std::string monomial_string(const Monomial& m) {
  std::string out;
  auto put = [&](const char* g, int e) {
    if (e == 0) return;
    if (!out.empty()) out += "*";
    out += g;
    if (e > 1) out += "^" + std::to_string(e);
  };
  put("G6", m.c);
  put("G4", m.b);
  put("G2", m.a);
  return out;
}

std::string QMPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    std::string mono = monomial_string(m);
    if (mono.empty()) {
      out += torcov::to_string(mag);
    } else if (mag == 1) {
      out += mono;
    } else {
      out += torcov::to_string(mag) + "*" + mono;
    }
  }
  return out;
}

QMPoly QMPoly::parse(const std::string& text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  QMPoly p;
  if (s.empty() || s == "0") return p;
  size_t i = 0;
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      if (s[i] == '-') sign = -1;
      ++i;
    } else if (i != 0) {
      throw ParseError("QMPoly::parse: expected sign at " + std::to_string(i));
    }
    size_t j = i;
    while (j < s.size() && s[j] != '+' && s[j] != '-') ++j;
    std::string term = s.substr(i, j - i);
    if (term.empty()) throw ParseError("QMPoly::parse: empty term");
    Rational coef = sign;
    Monomial m;
    std::stringstream ts(term);
    std::string f;
    while (std::getline(ts, f, '*')) {
      if (f.empty()) throw ParseError("QMPoly::parse: empty factor in '" + term + "'");
      if (f[0] == 'G') {
        int e = 1;
        auto caret = f.find('^');
        std::string k = f.substr(1, caret == std::string::npos ? std::string::npos : caret - 1);
        if (caret != std::string::npos) e = std::stoi(f.substr(caret + 1));
        if (k == "2") m.a += e;
        else if (k == "4") m.b += e;
        else if (k == "6") m.c += e;
        else throw ParseError("QMPoly::parse: unknown generator " + f);
      } else {
        coef *= parse_rational(f);
      }
    }
    p.add_term(m, coef);
    i = j;
  }
  return p;
}

QMPoly operator+(const QMPoly& x, const QMPoly& y) {
  QMPoly r = x;
  r += y;
  return r;
}

QMPoly operator-(const QMPoly& x, const QMPoly& y) {
  QMPoly r = x;
  r -= y;
  return r;
}

QMPoly operator*(const QMPoly& x, const QMPoly& y) {
  QMPoly r;
  for (const auto& [m1, c1] : x.terms())
    for (const auto& [m2, c2] : y.terms())
      r.add_term({m1.a + m2.a, m1.b + m2.b, m1.c + m2.c}, c1 * c2);
  return r;
}

QMPoly operator*(const Rational& s, const QMPoly& x) {
  QMPoly r = x;
  r *= s;
  return r;
}

bool operator==(const QMPoly& x, const QMPoly& y) { return x.terms() == y.terms(); }

QMPoly qm_pow(const QMPoly& x, int e) {
  QMPoly r = QMPoly::constant(1);
  for (int i = 0; i < e; ++i) r = r * x;
  return r;
}

Rational bernoulli(int n) {
  if (n < 0) throw PreconditionError("bernoulli: negative index");
  static std::mutex mu;
  static std::vector<Rational> cache{Rational(1)};
  std::lock_guard lock(mu);
  while (static_cast<int>(cache.size()) <= n) {
    const int m = static_cast<int>(cache.size());
    Rational acc = 0;
    for (int j = 0; j < m; ++j) acc += Rational(binomial(m + 1, j)) * cache[j];
    cache.push_back(-acc / (m + 1));
  }
  return cache[n];
}

static std::vector<Integer> divisor_power_sums(int m, int order) {
  std::vector<Integer> s(order + 1);
  for (int d = 1; d <= order; ++d) {
    Integer dm;
    mpz_ui_pow_ui(dm.get_mpz_t(), static_cast<unsigned long>(d), static_cast<unsigned long>(m));
    for (int n = d; n <= order; n += d) s[n] += dm;
  }
  return s;
}

QSeries eisenstein_series(int k, int order) {
  if (k < 2 || k % 2 != 0) throw PreconditionError("eisenstein_series: k must be even and >= 2");
  QSeries s = sigma_series(k - 1, order);
  s[0] = -bernoulli(k) / (2 * k);
  return s;
}

QSeries sigma_series(int m, int order) {
  if (m < 0) throw PreconditionError("sigma_series: m must be >= 0");
  auto sig = divisor_power_sums(m, order);
  QSeries s(order);
  for (int n = 1; n <= order; ++n) s[n] = Rational(sig[n]);
  return s;
}

std::vector<Monomial> qm_basis(int max_weight) {
  std::vector<Monomial> out;
  for (int c = 0; 6 * c <= max_weight; ++c)
    for (int b = 0; 4 * b + 6 * c <= max_weight; ++b)
      for (int a = 0; 2 * a + 4 * b + 6 * c <= max_weight; ++a) out.push_back({a, b, c});
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Powers of G2, G4, G6 to a fixed order, built lazily.
struct PowerTable {
  int order;
  std::vector<QSeries> g[3];
  explicit PowerTable(int order) : order(order) {
    for (int i = 0; i < 3; ++i) g[i].push_back(QSeries::constant(1, order));
  }
  const QSeries& power(int which, int e) {
    auto& v = g[which];
    while (static_cast<int>(v.size()) <= e) v.push_back(v.back() * eisenstein_series(2 * which + 2, order));
    return v[e];
  }
  QSeries monomial(const Monomial& m) {
    return power(0, m.a) * power(1, m.b) * power(2, m.c);
  }
};

}  // namespace

QSeries qm_to_series(const QMPoly& p, int order) {
  PowerTable t(order);
  QSeries s(order);
  for (const auto& [m, c] : p.terms()) s += c * t.monomial(m);
  return s;
}

int fit_min_order(int max_weight, int margin) {
  return static_cast<int>(qm_basis(max_weight).size()) + margin;
}

QMPoly fit_in_basis(const QSeries& s, const std::vector<Monomial>& basis, int margin) {
  const int need = static_cast<int>(basis.size()) + margin;
  if (s.order() < need)
    throw UnderdeterminedError("fit needs order >= " + std::to_string(need) + ", got " +
                               std::to_string(s.order()));
  const int N = s.order();
  PowerTable t(N);
  std::vector<QSeries> cols;
  cols.reserve(basis.size());
  for (const auto& m : basis) cols.push_back(t.monomial(m));
  std::vector<std::vector<Rational>> rows(N + 1, std::vector<Rational>(basis.size()));
  for (int n = 0; n <= N; ++n)
    for (size_t j = 0; j < basis.size(); ++j) rows[n][j] = cols[j][n];
  std::vector<Rational> rhs(s.coeffs());
  std::vector<Rational> x;
  try {
    x = solve_exact(rows, rhs);
  } catch (const NoSolutionError& e) {
    throw NoSolutionError("not quasimodular in the given basis: first mismatch at q^" +
                              std::to_string(e.witness),
                          e.witness);
  }
  QMPoly p;
  for (size_t j = 0; j < basis.size(); ++j) p.add_term(basis[j], x[j]);
  return p;
}

QMPoly fit_quasimodular(const QSeries& s, int max_weight, int margin) {
  return fit_in_basis(s, qm_basis(max_weight), margin);
}

QMPoly qm_dq(const QMPoly& p) {
  static const QMPoly dg2 = QMPoly::parse("-2*G2^2 + 5/6*G4");
  static const QMPoly dg4 = QMPoly::parse("-8*G4*G2 + 7/10*G6");
  static const QMPoly dg6 = QMPoly::parse("-12*G6*G2 + 400/7*G4^2");
  QMPoly r;
  for (const auto& [m, c] : p.terms()) {
    if (m.a > 0) {
      QMPoly t;
      t.add_term({m.a - 1, m.b, m.c}, c * m.a);
      r += t * dg2;
    }
    if (m.b > 0) {
      QMPoly t;
      t.add_term({m.a, m.b - 1, m.c}, c * m.b);
      r += t * dg4;
    }
    if (m.c > 0) {
      QMPoly t;
      t.add_term({m.a, m.b, m.c - 1}, c * m.c);
      r += t * dg6;
    }
  }
  return r;
}

QMPoly eisenstein_qmpoly(int k) {
  if (k < 2 || k % 2 != 0) throw PreconditionError("eisenstein_qmpoly: k must be even and >= 2");
  if (k <= 6) return QMPoly::gen(k);
  static std::mutex mu;
  static std::map<int, QMPoly> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(k);
  if (it != cache.end()) return it->second;
  // G_k for k >= 8 is modular, so it lies in the span of G4^b G6^c.
  std::vector<Monomial> basis;
  for (int c = 0; 6 * c <= k; ++c)
    if ((k - 6 * c) % 4 == 0) basis.push_back({0, (k - 6 * c) / 4, c});
  std::sort(basis.begin(), basis.end());
  const int order = static_cast<int>(basis.size()) + kDefaultFitMargin;
  QMPoly p = fit_in_basis(eisenstein_series(k, order), basis);
  cache.emplace(k, p);
  return p;
}

}  // namespace torcov
