#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>

namespace wavegc {

using Rational = mpq_class;
using Integer = mpz_class;

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline bool is_even_integer(const Rational& q) {
  return is_integer(q) && mpz_even_p(q.get_num_mpz_t()) != 0;
}

inline Rational make_rational(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

std::size_t hash_value(const Rational& q);

// Integer power, exponent must fit in a long.
Rational ipow(const Rational& base, long exponent);

// Exact rational root base^(num/den) when it exists.
bool exact_rational_power(const Rational& base, const Rational& exponent, Rational& out);

}  // namespace wavegc
