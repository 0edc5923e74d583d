#include "torcov/series.hpp"

#include <algorithm>

#include "torcov/errors.hpp"

namespace torcov {

QSeries::QSeries(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
  if (c_.empty()) c_.resize(1);
}

QSeries QSeries::constant(const Rational& v, int order) {
  QSeries s(order);
  s.c_[0] = v;
  return s;
}

Rational QSeries::at(int n) const {
  if (n < 0 || n > order()) return 0;
  return c_[n];
}

QSeries QSeries::truncated(int order) const {
  QSeries s(order);
  for (int n = 0; n <= std::min(order, this->order()); ++n) s.c_[n] = c_[n];
  return s;
}

bool QSeries::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& r) { return r == 0; });
}

QSeries& QSeries::operator+=(const QSeries& o) {
  c_.resize(std::min(c_.size(), o.c_.size()));
  for (size_t n = 0; n < c_.size(); ++n) c_[n] += o.c_[n];
  return *this;
}

QSeries& QSeries::operator-=(const QSeries& o) {
  c_.resize(std::min(c_.size(), o.c_.size()));
  for (size_t n = 0; n < c_.size(); ++n) c_[n] -= o.c_[n];
  return *this;
}

QSeries& QSeries::operator*=(const Rational& s) {
  for (auto& x : c_) x *= s;
  return *this;
}

QSeries operator+(const QSeries& a, const QSeries& b) {
  QSeries r = a;
  r += b;
  return r;
}

QSeries operator-(const QSeries& a, const QSeries& b) {
  QSeries r = a;
  r -= b;
  return r;
}

QSeries operator-(const QSeries& a) {
  QSeries r = a;
  r *= Rational(-1);
  return r;
}

QSeries operator*(const QSeries& a, const QSeries& b) { return series_mul(a, b); }

QSeries operator*(const Rational& s, const QSeries& a) {
  QSeries r = a;
  r *= s;
  return r;
}

QSeries operator*(const QSeries& a, const Rational& s) { return s * a; }

bool operator==(const QSeries& a, const QSeries& b) { return a.coeffs() == b.coeffs(); }

QSeries series_mul(const QSeries& a, const QSeries& b) {
  int N = std::min(a.order(), b.order());
  QSeries r(N);
  for (int i = 0; i <= N; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; i + j <= N; ++j) {
      if (b[j] != 0) r[i + j] += a[i] * b[j];
    }
  }
  return r;
}

QSeries series_div(const QSeries& a, const QSeries& b) {
  if (b[0] == 0) throw PreconditionError("series_div: divisor has zero constant term");
  int N = std::min(a.order(), b.order());
  QSeries c(N);
  Rational inv = 1 / b[0];
  for (int n = 0; n <= N; ++n) {
    Rational acc = a[n];
    for (int k = 1; k <= n; ++k) {
      if (b[k] != 0) acc -= b[k] * c[n - k];
    }
    c[n] = acc * inv;
  }
  return c;
}

QSeries series_pow(const QSeries& a, int e) {
  if (e < 0) throw PreconditionError("series_pow: negative exponent");
  QSeries r = QSeries::constant(1, a.order());
  QSeries base = a;
  while (e > 0) {
    if (e & 1) r = r * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return r;
}

QSeries dq(const QSeries& a) {
  QSeries r(a.order());
  for (int n = 1; n <= a.order(); ++n) r[n] = a[n] * n;
  return r;
}

QSeries partition_gf(int order) {
  // 1/prod(1-q^k), one geometric factor at a time.
  std::vector<Integer> p(order + 1);
  p[0] = 1;
  for (int k = 1; k <= order; ++k)
    for (int n = k; n <= order; ++n) p[n] += p[n - k];
  QSeries s(order);
  for (int n = 0; n <= order; ++n) s[n] = Rational(p[n]);
  return s;
}

QSeries euler_product(int order) {
  std::vector<Integer> e(order + 1);
  e[0] = 1;
  for (int k = 1; k <= order; ++k)
    for (int n = order; n >= k; --n) e[n] -= e[n - k];
  QSeries s(order);
  for (int n = 0; n <= order; ++n) s[n] = Rational(e[n]);
  return s;
}

std::optional<int> first_difference(const QSeries& a, const QSeries& b) {
  int N = std::min(a.order(), b.order());
  for (int n = 0; n <= N; ++n)
    if (a[n] != b[n]) return n;
  return std::nullopt;
}

std::vector<std::string> serialize(const QSeries& s) {
  std::vector<std::string> out;
  out.reserve(s.coeffs().size());
  for (const auto& c : s.coeffs()) out.push_back(to_string(c));
  return out;
}

}  // namespace torcov
