#pragma once

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "wavegc/expr/expr.hpp"

namespace wavegc {

inline constexpr int kDefaultJetOrder = 4;

enum class Direction { T, X };

class JetOrderOverflow : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InconsistentBinding : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotPolynomial : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Binding = std::pair<Expr, Expr>;
using Bindings = std::vector<Binding>;

Expr diff(const Expr& e, Symbol s);
Expr diff(const Expr& e, Symbol s, int times);

Symbol time_var();
Symbol space_var();

Expr total_derivative(const Expr& e, Direction d, int max_order = kDefaultJetOrder);

// Simultaneous substitution. Keys are symbols or function applications. A bound
// jet also fixes every higher jet of the same dependent variable, obtained by
// total differentiation of its value.
Expr substitute(const Expr& e, const Bindings& bindings, int max_order = kDefaultJetOrder);

// Simultaneous substitution without jet closure: jets are plain coordinates.
Expr substitute_plain(const Expr& e, const Bindings& bindings);

// Replaces every application of fn (and its formal partials) by body, a closed
// form written in fn's slot symbols.
Expr substitute_function(const Expr& e, Function fn, const Expr& body);

struct Collected {
  std::vector<Symbol> vars;
  std::map<std::vector<int>, Expr> parts;  // exponent vector -> coefficient

  Expr monomial(const std::vector<int>& exps) const;
  Expr coefficient(const std::vector<int>& exps) const;
};

Collected collect(const Expr& e, const std::vector<Symbol>& vars);

// Splits e = sum c_m * m over canonical monomials m, coefficients rational.
std::vector<std::pair<Expr, Rational>> rational_split(const Expr& e);

}  // namespace wavegc
