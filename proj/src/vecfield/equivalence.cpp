#include "wavegc/vecfield/equivalence.hpp"

#include "wavegc/expr/names.hpp"

namespace wavegc {

EquivalenceParams::EquivalenceParams() : phi(names().x) {}

std::pair<Expr, Expr> apply_equivalence(const EquivalenceParams& p, const Expr& f, const Expr& g) {
  const auto& n = names();
  Expr phi_x = diff(p.phi, n.x), phi_xx = diff(phi_x, n.x);
  Expr psi_x = diff(p.psi, n.x), psi_xx = diff(psi_x, n.x);
  if (numerator(p.c1).is_zero() || numerator(p.c2).is_zero() || numerator(phi_x).is_zero())
    throw TransformError("degenerate equivalence parameters");
  Expr c1sq = p.c1 * p.c1;
  Expr slope = (p.c2 * Expr(n.u_x) + psi_x) / phi_x;
  Expr ft = phi_x * phi_x * f / c1sq;
  Expr gt = (p.c2 * g + slope * phi_xx * f - psi_xx * f + Expr(2) * p.c4) / c1sq;
  return {normalize(ft), normalize(gt)};
}

PointTransform equivalence_transform(const EquivalenceParams& p) {
  const auto& n = names();
  Expr t(n.t), x(n.x), u(n.u);
  Expr T = p.c1 * t + p.c0;
  Expr U = p.c2 * u + p.c4 * t * t + p.c3 * t + p.psi;
  if (!p.phi_inverse) return PointTransform(T, p.phi, U);
  Expr t_old = (t - p.c0) / p.c1;
  Expr x_old = *p.phi_inverse;
  Expr psi_old = substitute_plain(p.psi, {{x, x_old}});
  Expr u_old = (u - p.c4 * t_old * t_old - p.c3 * t_old - psi_old) / p.c2;
  return PointTransform(T, p.phi, U, PointTransform(t_old, x_old, u_old));
}

namespace elementary {

namespace {
Expr t() { return Expr(names().t); }
Expr x() { return Expr(names().x); }
Expr u() { return Expr(names().u); }
}  // namespace

PointTransform translate_t(const Expr& c0) {
  return PointTransform(t() + c0, x(), u(), PointTransform(t() - c0, x(), u()));
}
PointTransform scale_t(const Expr& c1) { return PointTransform(c1 * t(), x(), u(), PointTransform(t() / c1, x(), u())); }
PointTransform change_x(const Expr& phi, const Expr& phi_inverse) {
  return PointTransform(t(), phi, u(), PointTransform(t(), phi_inverse, u()));
}
PointTransform scale_u(const Expr& c2) { return PointTransform(t(), x(), c2 * u(), PointTransform(t(), x(), u() / c2)); }
PointTransform gauge_linear(const Expr& c3) {
  return PointTransform(t(), x(), u() + c3 * t(), PointTransform(t(), x(), u() - c3 * t()));
}
PointTransform gauge_quadratic(const Expr& c4) {
  return PointTransform(t(), x(), u() + c4 * t() * t(), PointTransform(t(), x(), u() - c4 * t() * t()));
}
PointTransform gauge_x(const Expr& psi) {
  return PointTransform(t(), x(), u() + psi, PointTransform(t(), x(), u() - psi));
}

}  // namespace elementary

namespace generator {

namespace {
const Names& n() { return names(); }
}  // namespace

VectorField Du() { return VectorField::augmented(0, 0, Expr(n().u), 0, Expr(n().gc)); }
VectorField Dt() {
  return VectorField::augmented(Expr(n().t), 0, 0, Expr(-2) * Expr(n().fc), Expr(-2) * Expr(n().gc));
}
VectorField Pt() { return VectorField::augmented(1, 0, 0, 0, 0); }
VectorField D(const Expr& phi) {
  Expr phi_x = diff(phi, n().x);
  return VectorField::augmented(0, phi, 0, Expr(2) * phi_x * Expr(n().fc),
                                diff(phi_x, n().x) * Expr(n().u_x) * Expr(n().fc));
}
VectorField G(const Expr& psi) {
  return VectorField::augmented(0, 0, psi, 0, -diff(psi, n().x, 2) * Expr(n().fc));
}
VectorField F1() { return VectorField::augmented(0, 0, Expr(n().t), 0, 0); }
VectorField F2() { return VectorField::augmented(0, 0, Expr(n().t) * Expr(n().t), 0, 2); }

}  // namespace generator

}  // namespace wavegc
