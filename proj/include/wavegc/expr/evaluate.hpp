#pragma once

#include <boost/multiprecision/mpfr.hpp>
#include <cstdint>
#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "wavegc/expr/expr.hpp"

namespace wavegc {

using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<200>,
                                           boost::multiprecision::et_off>;

// Exact rational when every operation on the path stayed rational.
struct Value {
  bool exact = true;
  Rational q;
  Real r;

  static Value of(const Rational& v) { return Value{true, v, Real(0)}; }
  static Value of(const Real& v) { return Value{false, Rational(0), v}; }
  Real real() const;
  bool is_zero() const { return exact ? q == 0 : r == 0; }
  std::string str() const;
};

class SingularPoint : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Arbitrary functions are modelled by polynomials so that formal partials stay
// mutually consistent; inverse-linked pairs get mutually inverse affine maps.
class FunctionModel {
 public:
  using Monomial = std::vector<int>;
  std::map<Monomial, Rational> coeffs;
  Value eval(const std::vector<std::uint8_t>& deriv, const std::vector<Value>& args) const;
};

struct Environment {
  std::map<const SymbolInfo*, Value> symbols;
  std::map<const FunctionInfo*, FunctionModel> functions;
};

Value evaluate(const Expr& e, const Environment& env);

// Random rational in [-bound, bound] with denominator in [1, bound].
Rational random_rational(std::mt19937_64& rng, long bound, bool nonzero = true);

// Fills env with values for all free symbols/functions of e not yet present.
void sample_environment(const Expr& e, std::mt19937_64& rng, long bound, Environment& env);

}  // namespace wavegc
