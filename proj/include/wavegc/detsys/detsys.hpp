#pragma once

#include <string>
#include <vector>

#include "wavegc/expr/zero_test.hpp"
#include "wavegc/vecfield/prolong.hpp"

namespace wavegc {

// Right-hand side f(x,u_x) u_xx + g(x,u_x) with formal f, g.
Expr symbolic_f();
Expr symbolic_g();

// pr Q (u_tt - f u_xx - g) restricted to solutions (u_tt -> f u_xx + g).
Expr invariance_residual(const VectorField& Q, const Expr& f, const Expr& g);

struct DeterminingEquation {
  std::vector<int> exponents;  // powers of the split variables
  std::string monomial;        // e.g. "u_tx*u_t"
  Expr equation;
};

struct DeterminingSystem {
  std::vector<Symbol> split_vars;  // u_t, u_tx, u_xx
  std::vector<DeterminingEquation> equations;

  const DeterminingEquation* find(const std::string& monomial) const;
  std::string str() const;  // one "monomial: equation = 0" line each
};

// Raw split of the residual for tau(t,x,u), xi(t,x,u), eta(t,x,u) and symbolic f, g.
DeterminingSystem generate_determining_system();

// Imposes xi_u = tau_u = 0, and eta_uu = 0 when eta_linear, by dropping the corresponding partials.
Expr impose_preliminary(const Expr& e, bool eta_linear = true);

// True when a and b agree up to a nonzero rational factor.
bool proportional(const Expr& a, const Expr& b);

struct SymmetryCheck {
  Verdict verdict = Verdict::Undecided;
  Expr residual;
  std::string log;
};

SymmetryCheck check_symmetry(const Expr& f, const Expr& g, const VectorField& Q);

// Finite ansatz for tau, xi, eta. Each list is a set of basis functions.
struct AnsatzBasis {
  std::vector<Expr> tau, xi, eta;
  static AnsatzBasis standard();
  std::size_t size() const { return tau.size() + xi.size() + eta.size(); }
};

class AnsatzError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct AnsatzSolution {
  int dimension = 0;                 // within the ansatz
  std::vector<VectorField> basis;    // solution fields
  std::vector<SymmetryCheck> checks;  // check_symmetry of each solution
  int equations = 0;
};

AnsatzSolution solve_within_ansatz(const Expr& f, const Expr& g, const AnsatzBasis& basis = AnsatzBasis::standard());

// Simplified system for f_{u_x} != 0: tau_u = tau_x = xi_u = xi_t = eta_uu = eta_xu = eta_ttx = tau_ttt = 0,
// 2 eta_tu = tau_tt. Returns the first violated relation, empty if all hold.
std::string simplified_system_violation(const VectorField& Q);

}  // namespace wavegc
