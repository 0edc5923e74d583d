#pragma once

#include <optional>
#include <vector>

#include "torcov/rational.hpp"

namespace torcov {

// Truncated power series in q with exact coefficients 0..order.
class QSeries {
 public:
  QSeries() : c_(1) {}
  explicit QSeries(int order) : c_(order < 0 ? 1 : order + 1) {}
  QSeries(std::vector<Rational> coeffs);
  static QSeries constant(const Rational& v, int order);

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const Rational& operator[](int n) const { return c_[n]; }
  Rational& operator[](int n) { return c_[n]; }
  const std::vector<Rational>& coeffs() const { return c_; }

  // Coefficient at q^n, zero beyond the order.
  Rational at(int n) const;
  QSeries truncated(int order) const;
  bool is_zero() const;

  QSeries& operator+=(const QSeries& o);
  QSeries& operator-=(const QSeries& o);
  QSeries& operator*=(const Rational& s);

 private:
  std::vector<Rational> c_;
};

QSeries operator+(const QSeries& a, const QSeries& b);
QSeries operator-(const QSeries& a, const QSeries& b);
QSeries operator-(const QSeries& a);
QSeries operator*(const QSeries& a, const QSeries& b);
QSeries operator*(const Rational& s, const QSeries& a);
QSeries operator*(const QSeries& a, const Rational& s);
bool operator==(const QSeries& a, const QSeries& b);

QSeries series_mul(const QSeries& a, const QSeries& b);
// Throws PreconditionError when b has zero constant term.
QSeries series_div(const QSeries& a, const QSeries& b);
QSeries series_pow(const QSeries& a, int e);
QSeries dq(const QSeries& a);

QSeries partition_gf(int order);
QSeries euler_product(int order);

// First index (up to the common order) where a and b differ.
std::optional<int> first_difference(const QSeries& a, const QSeries& b);

std::vector<std::string> serialize(const QSeries& s);

}  // namespace torcov
