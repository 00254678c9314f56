#include "wavegc/vecfield/prolong.hpp"

#include "wavegc/expr/names.hpp"

namespace wavegc {

VectorField ProlongedField::as_field() const {
  return VectorField(Chart::Jet2, {base.coeff(0), base.coeff(1), base.coeff(2), eta_t, eta_x, eta_tt, eta_tx, eta_xx});
}

ProlongedField prolong2(const VectorField& q0) {
  const auto& n = names();
  VectorField q = q0.project(Chart::Base);
  const Expr& tau = q.coeff(0);
  const Expr& xi = q.coeff(1);
  const Expr& eta = q.coeff(2);
  auto J = [&](int nt, int nx) { return Expr(Symbol::jet(n.u, nt, nx)); };
  auto Dt = [](const Expr& e) { return total_derivative(e, Direction::T); };
  auto Dx = [](const Expr& e) { return total_derivative(e, Direction::X); };

  // characteristic W = eta - tau u_t - xi u_x
  Expr W = eta - tau * J(1, 0) - xi * J(0, 1);
  Expr Wt = Dt(W), Wx = Dx(W);
  ProlongedField p{q, {}, {}, {}, {}, {}};
  p.eta_t = Wt + tau * J(2, 0) + xi * J(1, 1);
  p.eta_x = Wx + tau * J(1, 1) + xi * J(0, 2);
  p.eta_tt = Dt(Wt) + tau * J(3, 0) + xi * J(2, 1);
  p.eta_tx = Dx(Wt) + tau * J(2, 1) + xi * J(1, 2);
  p.eta_xx = Dx(Wx) + tau * J(1, 2) + xi * J(0, 3);
  return p;
}

}  // namespace wavegc
