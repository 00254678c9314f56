#include "wavegc/expr/rational.hpp"

#include <cstdlib>
#include <stdexcept>

namespace wavegc {

namespace {

std::size_t hash_mpz(const mpz_t z) {
  std::size_t h = static_cast<std::size_t>(mpz_sgn(z)) * 0x9e3779b97f4a7c15ULL;
  std::size_t n = mpz_size(z);
  for (std::size_t i = 0; i < n; ++i) {
    h ^= static_cast<std::size_t>(mpz_getlimbn(z, static_cast<mp_size_t>(i))) + 0x9e3779b97f4a7c15ULL +
         (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace

std::size_t hash_value(const Rational& q) {
  std::size_t h = hash_mpz(q.get_num_mpz_t());
  return h ^ (hash_mpz(q.get_den_mpz_t()) * 31 + 0x7f4a7c15ULL);
}

Rational ipow(const Rational& base, long exponent) {
  if (exponent == 0) return Rational(1);
  if (base == 0) {
    if (exponent < 0) throw std::domain_error("zero to a negative power");
    return Rational(0);
  }
  unsigned long e = static_cast<unsigned long>(std::labs(exponent));
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), e);
  Rational r = exponent > 0 ? Rational(num, den) : Rational(den, num);
  r.canonicalize();
  return r;
}

bool exact_rational_power(const Rational& base, const Rational& exponent, Rational& out) {
  if (is_integer(exponent)) {
    if (!exponent.get_num().fits_slong_p()) return false;
    if (base == 0 && exponent < 0) return false;
    out = ipow(base, exponent.get_num().get_si());
    return true;
  }
  if (base <= 0) return false;
  if (!exponent.get_den().fits_ulong_p() || !exponent.get_num().fits_slong_p()) return false;
  unsigned long k = exponent.get_den().get_ui();
  Integer rn, rd;
  if (mpz_root(rn.get_mpz_t(), base.get_num_mpz_t(), k) == 0) return false;
  if (mpz_root(rd.get_mpz_t(), base.get_den_mpz_t(), k) == 0) return false;
  out = ipow(Rational(rn, rd), exponent.get_num().get_si());
  return true;
}

}  // namespace wavegc
