#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "wavegc/expr/rational.hpp"
#include "wavegc/expr/symbol.hpp"

namespace wavegc {

enum class Kind : std::uint8_t { Const, Sym, Func, Pow, Mul, Exp, LnAbs, Abs, Add };

struct Node;

class DivisionByZero : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Immutable expression handle. Values built through the arithmetic operators and
// the free builders below are canonical; raw_* constructors are not, and
// normalize() canonicalizes them.
class Expr {
 public:
  Expr();
  Expr(int v);
  Expr(long v);
  Expr(const Rational& q);
  Expr(Symbol s);

  static Expr func(Function f, std::vector<Expr> args, std::vector<std::uint8_t> deriv = {});
  static Expr func(Function f);  // default arguments

  static Expr raw_add(std::vector<Expr> terms);
  static Expr raw_mul(std::vector<Expr> factors);
  static Expr raw_pow(Expr base, Expr exponent);

  Kind kind() const;
  bool canonical() const;
  const Rational& value() const;  // Const value, Mul coefficient
  Symbol symbol() const;
  Function function() const;
  const std::vector<std::uint8_t>& deriv() const;
  const std::vector<Expr>& ops() const;
  const Expr& base() const;
  const Expr& exponent() const;
  const Expr& arg() const;
  std::size_t hash() const;

  bool is_const() const { return kind() == Kind::Const; }
  bool is_zero() const;
  bool is_one() const;
  bool is_sym() const { return kind() == Kind::Sym; }
  bool is_sym(Symbol s) const;
  bool as_rational(Rational& out) const;

  bool has(Symbol s) const;
  bool has(Function f) const;
  bool has_any(const std::vector<Symbol>& syms) const;
  const std::vector<const SymbolInfo*>& free_symbols() const;
  const std::vector<const FunctionInfo*>& free_functions() const;

  // Parseable text: explicit arguments, ^, *, lnabs(), abs().
  std::string str() const;
  // Display text: f_{u_x}, implicit default arguments.
  std::string pretty() const;

  const Node* node() const { return n_.get(); }
  explicit Expr(std::shared_ptr<const Node> n) : n_(std::move(n)) {}

  friend bool operator==(const Expr& a, const Expr& b);
  friend bool operator!=(const Expr& a, const Expr& b) { return !(a == b); }

 private:
  std::shared_ptr<const Node> n_;
};

struct Node {
  Kind kind = Kind::Const;
  bool canonical = true;
  std::size_t hash = 0;
  Rational num;
  Symbol sym;
  Function fn;
  std::vector<std::uint8_t> deriv;
  std::vector<Expr> ops;
  std::vector<const SymbolInfo*> free_syms;     // sorted by address
  std::vector<const FunctionInfo*> free_funcs;  // sorted by address
};

// Total order on canonical expressions; 0 iff structurally equal.
int compare(const Expr& a, const Expr& b);

struct ExprLess {
  bool operator()(const Expr& a, const Expr& b) const { return compare(a, b) < 0; }
};
struct ExprHash {
  std::size_t operator()(const Expr& e) const { return e.hash(); }
};

Expr operator+(const Expr& a, const Expr& b);
Expr operator-(const Expr& a, const Expr& b);
Expr operator-(const Expr& a);
Expr operator*(const Expr& a, const Expr& b);
Expr operator/(const Expr& a, const Expr& b);
Expr& operator+=(Expr& a, const Expr& b);
Expr& operator-=(Expr& a, const Expr& b);
Expr& operator*=(Expr& a, const Expr& b);

Expr sum(const std::vector<Expr>& terms);
Expr product(const std::vector<Expr>& factors);
Expr pow(const Expr& base, const Expr& exponent);
Expr exp(const Expr& a);
Expr lnabs(const Expr& a);
Expr abs(const Expr& a);

Expr normalize(const Expr& e);

// Canonical sum split into (rational coefficient, monomial) with monomial free of
// a numeric coefficient (1 for constants).
std::pair<Rational, Expr> split_coefficient(const Expr& term);
// Terms of a sum (the expression itself when it is not a sum).
std::vector<Expr> terms_of(const Expr& e);
// Factor list of a monomial as (base, exponent) pairs, coefficient excluded.
std::vector<std::pair<Expr, Expr>> factors_of(const Expr& monomial);

// Multiplies out sum denominators; the result is zero iff e is zero as a rational
// function in its atoms (up to the nonvanishing assumptions on those denominators).
Expr numerator(const Expr& e);

}  // namespace wavegc

template <>
struct std::hash<wavegc::Expr> {
  std::size_t operator()(const wavegc::Expr& e) const { return e.hash(); }
};
