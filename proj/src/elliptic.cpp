#include "torcov/elliptic.hpp"

#include <algorithm>

#include "torcov/errors.hpp"

namespace torcov {

QSeries ZetaExpansion::at(int k) const {
  auto it = coeffs.find(k);
  return it == coeffs.end() ? QSeries(N) : it->second;
}

void ZetaExpansion::normalize() {
  for (auto it = coeffs.begin(); it != coeffs.end();) {
    if (it->second.is_zero()) it = coeffs.erase(it);
    else ++it;
  }
}

ZetaExpansion fourier_expansion(EllipticKind which, int K, int N, int m) {
  if (K < 0 || N < 0) throw PreconditionError("fourier_expansion: K and N must be >= 0");
  if (m < 0) throw PreconditionError("fourier_expansion: m must be >= 0");
  ZetaExpansion z{K, N, {}};
  const Rational sgn = (m % 2 == 0) ? 1 : -1;
  for (int k = 1; k <= K; ++k) {
    QSeries pos(N), neg(N);
    const Rational km = rpow(Rational(k), m + 1);
    switch (which) {
      case EllipticKind::Z:
        for (int n = 0; n * k <= N; ++n) pos[n * k] += 1;
        for (int n = 1; n * k <= N; ++n) neg[n * k] -= 1;
        break;
      case EllipticKind::P:
        for (int n = 0; n * k <= N; ++n) pos[n * k] += km;
        for (int n = 1; n * k <= N; ++n) neg[n * k] += sgn * km;
        break;
      case EllipticKind::L:
        for (int n = 1; n * k <= N; ++n) {
          pos[n * k] += n;
          neg[n * k] += n;
        }
        break;
      case EllipticKind::DqP:
        for (int n = 1; n * k <= N; ++n) {
          pos[n * k] += km * (n * k);
          neg[n * k] += sgn * km * (n * k);
        }
        break;
    }
    z.coeffs[k] = pos;
    z.coeffs[-k] = neg;
  }
  if (which == EllipticKind::Z) z.coeffs[0] = QSeries::constant(Rational(1, 2), N);
  z.normalize();
  return z;
}

ZetaExpansion operator+(const ZetaExpansion& a, const ZetaExpansion& b) {
  ZetaExpansion r{std::min(a.K, b.K), std::min(a.N, b.N), {}};
  for (int k = -r.K; k <= r.K; ++k) r.coeffs[k] = a.at(k).truncated(r.N) + b.at(k).truncated(r.N);
  r.normalize();
  return r;
}

ZetaExpansion operator*(const Rational& s, const ZetaExpansion& a) {
  ZetaExpansion r = a;
  for (auto& [k, c] : r.coeffs) c *= s;
  r.normalize();
  return r;
}

ZetaExpansion add_constant(const ZetaExpansion& a, const QSeries& c) {
  ZetaExpansion r = a;
  QSeries base = r.at(0).truncated(std::min(a.N, c.order()));
  r.N = base.order();
  for (auto& [k, s] : r.coeffs) s = s.truncated(r.N);
  r.coeffs[0] = base + c.truncated(r.N);
  r.normalize();
  return r;
}

ZetaExpansion zeta_mul(const ZetaExpansion& a, const ZetaExpansion& b) {
  const int N = std::min(a.N, b.N);
  const int K = std::max(0, std::min(a.K, b.K) - N);
  ZetaExpansion r{K, N, {}};
  for (const auto& [ka, sa] : a.coeffs)
    for (const auto& [kb, sb] : b.coeffs) {
      const int k = ka + kb;
      if (k < -K || k > K) continue;
      auto& dst = r.coeffs.try_emplace(k, QSeries(N)).first->second;
      dst += series_mul(sa.truncated(N), sb.truncated(N));
    }
  r.normalize();
  return r;
}

QSeries constant_term_product(const std::vector<ZetaExpansion>& factors, int N) {
  std::map<int, QSeries> state;
  state.emplace(0, QSeries::constant(1, N));
  for (size_t f = 0; f < factors.size(); ++f) {
    const bool last = f + 1 == factors.size();
    std::map<int, QSeries> next;
    for (const auto& [E, S] : state) {
      for (const auto& [k, F] : factors[f].coeffs) {
        const int E2 = E + k;
        if (last && E2 != 0) continue;
        // a positive exponent must later be cancelled by zeta^-j terms,
        // each of which costs at least q^j
        const int limit = N - std::max(E2, 0);
        if (limit < 0) continue;
        auto& dst = next.try_emplace(E2, QSeries(N)).first->second;
        for (int i = 0; i <= std::min(limit, S.order()); ++i) {
          if (S[i] == 0) continue;
          for (int j = 0; i + j <= limit && j <= F.order(); ++j)
            if (F[j] != 0) dst[i + j] += S[i] * F[j];
        }
      }
    }
    state = std::move(next);
  }
  if (factors.empty()) return QSeries::constant(1, N);
  auto it = state.find(0);
  return it == state.end() ? QSeries(N) : it->second;
}

namespace {

using I128 = __int128;
using Dense = std::vector<I128>;

I128 to_small(const Rational& r) {
  if (r.get_den() != 1 || !mpz_fits_slong_p(r.get_num_mpz_t()))
    throw PreconditionError("constant_term_edges: factor coefficients must be machine-size integers");
  return mpz_get_si(r.get_num_mpz_t());
}

Integer to_integer(I128 v) {
  const bool neg = v < 0;
  unsigned __int128 mag = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
  unsigned long long w[2] = {static_cast<unsigned long long>(mag), static_cast<unsigned long long>(mag >> 64)};
  Integer z;
  mpz_import(z.get_mpz_t(), 2, -1, sizeof(unsigned long long), 0, 0, w);
  return neg ? Integer(-z) : z;
}

struct SparseFactor {
  int a, b;  // lower and upper endpoint
  std::vector<std::pair<int, std::vector<std::pair<int, I128>>>> terms;  // k -> (q-degree, coeff)
};

}  // namespace

QSeries constant_term_edges(const GlobalGraph& g, const std::vector<ZetaExpansion>& factors, int N) {
  if (static_cast<int>(factors.size()) != g.edge_count()) throw PreconditionError("one factor per edge");
  const int n = g.n;
  std::vector<SparseFactor> fs;
  for (int e = 0; e < g.edge_count(); ++e) {
    if (g.is_loop(e)) throw PreconditionError("constant_term_edges: loops must be split off first");
    SparseFactor f{g.edges[e].first, g.edges[e].second, {}};
    for (const auto& [k, s] : factors[e].coeffs) {
      if (k < -N || k > N) continue;  // widths never exceed N
      std::vector<std::pair<int, I128>> nz;
      for (int d = 0; d <= std::min(N, s.order()); ++d)
        if (s[d] != 0) nz.emplace_back(d, to_small(s[d]));
      if (!nz.empty()) f.terms.emplace_back(k, std::move(nz));
    }
    fs.push_back(std::move(f));
  }

  using State = std::map<std::vector<int>, Dense>;
  State state;
  state.emplace(std::vector<int>(n, 0), Dense(N + 1, 0));
  state.begin()->second[0] = 1;

  // Lower bound on the q-degree still to be paid: flow that has to reach
  // lower labels among the vertices >= v.
  auto pending = [&](const std::vector<int>& ex, int v) {
    int run = 0, best = 0;
    for (int u = v; u < n; ++u) {
      run += ex[u];
      best = std::max(best, run);
    }
    return best;
  };

  for (int v = 0; v < n; ++v) {
    for (const auto& f : fs) {
      if (f.a != v) continue;
      State next;
      for (const auto& [ex, S] : state) {
        int lo = 0;
        while (lo <= N && S[lo] == 0) ++lo;
        if (lo > N) continue;
        for (const auto& [k, terms] : f.terms) {
          std::vector<int> ex2 = ex;
          ex2[f.a] += k;
          ex2[f.b] -= k;
          const int limit = N - pending(ex2, v);
          if (limit < lo) continue;
          Dense* dst = nullptr;
          for (int i = lo; i <= limit; ++i) {
            if (S[i] == 0) continue;
            for (const auto& [j, c] : terms) {
              if (i + j > limit) break;
              if (!dst) dst = &next.try_emplace(ex2, Dense(N + 1, 0)).first->second;
              I128 t, s;
              if (__builtin_mul_overflow(S[i], c, &t) || __builtin_add_overflow((*dst)[i + j], t, &s))
                throw Error("constant_term_edges: 128-bit overflow");
              (*dst)[i + j] = s;
            }
          }
        }
      }
      state = std::move(next);
    }
    for (auto it = state.begin(); it != state.end();) {
      if (it->first[v] != 0) it = state.erase(it);
      else ++it;
    }
  }
  QSeries out(N);
  auto it = state.find(std::vector<int>(n, 0));
  if (it != state.end())
    for (int d = 0; d <= N; ++d) out[d] = Rational(to_integer(it->second[d]));
  return out;
}

QSeries constant_term_graph(const GlobalGraph& g, const EdgeExponents& m, int order) {
  if (static_cast<int>(m.size()) != g.edge_count()) throw PreconditionError("one exponent per edge");
  std::vector<ZetaExpansion> fs;
  for (int x : m) {
    if (x < 0 || x % 2) throw PreconditionError("edge exponents must be even and >= 0");
    fs.push_back(fourier_expansion(EllipticKind::P, order, order, x));
  }
  return constant_term_edges(g, fs, order);
}

// ---- Laurent side ----

QMPoly LaurentU::at(int k) const {
  auto it = coeffs.find(k);
  return it == coeffs.end() ? QMPoly() : it->second;
}

int LaurentU::valuation() const { return coeffs.empty() ? max_degree + 1 : coeffs.begin()->first; }

static void laurent_normalize(LaurentU& x) {
  for (auto it = x.coeffs.begin(); it != x.coeffs.end();) {
    if (it->second.is_zero() || it->first > x.max_degree) it = x.coeffs.erase(it);
    else ++it;
  }
}

LaurentU laurent_expansion(EllipticKind which, int max_degree) {
  LaurentU x;
  x.max_degree = max_degree;
  switch (which) {
    case EllipticKind::Z:
      x.coeffs[-1] = QMPoly::constant(-1);
      for (int k = 0; 2 * k + 1 <= max_degree; ++k)
        x.coeffs[2 * k + 1] = Rational(2) / Rational(factorial(2 * k + 1)) * eisenstein_qmpoly(2 * k + 2);
      break;
    case EllipticKind::P:
      x.coeffs[-2] = QMPoly::constant(1);
      for (int k = 0; 2 * k <= max_degree; ++k)
        x.coeffs[2 * k] = Rational(2) / Rational(factorial(2 * k)) * eisenstein_qmpoly(2 * k + 2);
      break;
    case EllipticKind::L:
      x.coeffs[0] = QMPoly::parse("2*G2 + 1/12");
      for (int k = 1; 2 * k <= max_degree; ++k)
        x.coeffs[2 * k] = Rational(2) / Rational(factorial(2 * k)) * qm_dq(eisenstein_qmpoly(2 * k));
      break;
    case EllipticKind::DqP:
      throw PreconditionError("laurent_expansion: available for Z, P and L");
  }
  laurent_normalize(x);
  return x;
}

LaurentU operator+(const LaurentU& a, const LaurentU& b) {
  LaurentU r;
  r.max_degree = std::min(a.max_degree, b.max_degree);
  for (const auto& [k, c] : a.coeffs) r.coeffs[k] += c;
  for (const auto& [k, c] : b.coeffs) r.coeffs[k] += c;
  laurent_normalize(r);
  return r;
}

LaurentU operator*(const Rational& s, const LaurentU& a) {
  LaurentU r = a;
  for (auto& [k, c] : r.coeffs) c *= s;
  laurent_normalize(r);
  return r;
}

LaurentU operator*(const LaurentU& a, const LaurentU& b) {
  LaurentU r;
  r.max_degree = std::min(a.max_degree + b.valuation(), b.max_degree + a.valuation());
  for (const auto& [ka, ca] : a.coeffs)
    for (const auto& [kb, cb] : b.coeffs)
      if (ka + kb <= r.max_degree) r.coeffs[ka + kb] += ca * cb;
  laurent_normalize(r);
  return r;
}

LaurentU add_constant(const LaurentU& a, const QMPoly& c) {
  LaurentU r = a;
  if (r.max_degree >= 0) r.coeffs[0] += c;
  laurent_normalize(r);
  return r;
}

QSeries zeta0_Z_power_series(int e, int N) {
  if (e < 0) throw PreconditionError("zeta0_Z_power_series: e must be >= 0");
  std::vector<ZetaExpansion> fs(e, fourier_expansion(EllipticKind::Z, N, N));
  return constant_term_product(fs, N);
}

QMPoly zeta0_Z_power(int e, int N) {
  if (e < 1) throw PreconditionError("zeta0_Z_power: e must be >= 1");
  // Odd powers: [zeta^0] Z^j = -Res Z^j / 2.  Even powers: [zeta^0](Z - 1/2)^(j+1) = 0
  // is triangular in the unknown [zeta^0] Z^j.
  const int top = e % 2 ? e : e + 1;
  std::vector<QMPoly> c(top + 1);
  c[0] = QMPoly::constant(1);
  auto odd_value = [&](int j) {
    LaurentU z = laurent_expansion(EllipticKind::Z, j - 2 < -1 ? -1 : j - 2);
    LaurentU p = z;
    for (int i = 1; i < j; ++i) p = p * z;
    return Rational(-1, 2) * p.residue();
  };
  for (int j = 1; j <= top; j += 2) c[j] = odd_value(j);
  for (int j = 2; j <= e; j += 2) {
    QMPoly acc;
    const int l = j + 1;
    for (int i = 0; i <= l; ++i) {
      if (i == j) continue;
      acc += Rational(binomial(l, i)) * rpow(Rational(-1, 2), l - i) * c[i];
    }
    // coefficient of c[j] is C(l, j) (-1/2) = -(j+1)/2
    c[j] = Rational(2) / (j + 1) * acc;
  }
  const QMPoly& out = c[e];
  QSeries fourier = zeta0_Z_power_series(e, N);
  if (auto d = first_difference(fourier, qm_to_series(out, N)))
    throw MismatchError("[zeta^0] Z^" + std::to_string(e) + ": Fourier side differs at q^" + std::to_string(*d));
  return out;
}

}  // namespace torcov
