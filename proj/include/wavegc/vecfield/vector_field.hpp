#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "wavegc/expr/calculus.hpp"

namespace wavegc {

enum class Chart { Base, Augmented, Jet2 };

const char* chart_name(Chart c);
const std::vector<Symbol>& chart_coordinates(Chart c);
int coordinate_index(Chart c, Symbol s);  // -1 when absent

class ChartError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class VectorField {
 public:
  explicit VectorField(Chart chart = Chart::Base);
  VectorField(Chart chart, std::vector<Expr> coeffs);

  // tau d_t + xi d_x + eta d_u
  static VectorField base(const Expr& tau, const Expr& xi, const Expr& eta);
  // Augmented-chart field; the u_x coefficient is the first prolongation of (tau, xi, eta).
  static VectorField augmented(const Expr& tau, const Expr& xi, const Expr& eta, const Expr& f_coeff,
                               const Expr& g_coeff);
  // Full augmented coefficient list, checking the u_x entry.
  static VectorField augmented_checked(std::vector<Expr> coeffs);

  Chart chart() const { return chart_; }
  const std::vector<Expr>& coeffs() const { return c_; }
  const Expr& coeff(std::size_t i) const { return c_.at(i); }
  Expr coeff(Symbol s) const;

  // V(F) = sum_i V^i dF/dy^i
  Expr apply(const Expr& F) const;
  bool is_zero() const;
  VectorField project(Chart target) const;  // drop to base, or lift base onto augmented with zero f,g
  VectorField map(const std::function<Expr(const Expr&)>& fn) const;

  std::string str() const;  // "coef@coord + ..."

  friend VectorField operator+(const VectorField& a, const VectorField& b);
  friend VectorField operator-(const VectorField& a, const VectorField& b);
  friend VectorField operator*(const Expr& s, const VectorField& v);
  friend bool operator==(const VectorField& a, const VectorField& b);

 private:
  Chart chart_;
  std::vector<Expr> c_;
};

// u_x coefficient of the first prolongation; requires D_x(tau) = 0.
Expr prolong_ux(const Expr& tau, const Expr& xi, const Expr& eta);

VectorField bracket(const VectorField& v, const VectorField& w);

VectorField parse_field(std::string_view text, Chart chart);

}  // namespace wavegc
