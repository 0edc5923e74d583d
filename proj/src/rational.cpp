#include "torcov/rational.hpp"

#include "torcov/errors.hpp"

namespace torcov {

std::string to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational parse_rational(const std::string& s) {
  Rational r;
  if (s.empty() || r.set_str(s, 10) != 0) throw ParseError("bad rational: '" + s + "'");
  if (r.get_den() == 0) throw ParseError("zero denominator: '" + s + "'");
  r.canonicalize();
  return r;
}

Rational rpow(const Rational& r, int e) {
  if (e < 0) {
    if (r == 0) throw PreconditionError("zero to a negative power");
    Rational inv = 1 / r;
    return rpow(inv, -e);
  }
  Rational out;
  mpz_pow_ui(out.get_num_mpz_t(), r.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(out.get_den_mpz_t(), r.get_den_mpz_t(), static_cast<unsigned long>(e));
  return out;
}

Rational rpow(long base, int e) { return rpow(Rational(base), e); }

Integer factorial(unsigned n) {
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return b;
}

}  // namespace torcov
