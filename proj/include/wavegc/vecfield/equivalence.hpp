#pragma once

#include <optional>
#include <utility>

#include "wavegc/vecfield/transform.hpp"

namespace wavegc {

// t~ = c1 t + c0, x~ = phi(x), u~ = c2 u + c4 t^2 + c3 t + psi(x)
struct EquivalenceParams {
  Expr c0{0}, c1{1}, c2{1}, c3{0}, c4{0};
  Expr phi;  // defaults to x
  Expr psi{0};
  std::optional<Expr> phi_inverse;  // in the symbol x standing for x~

  EquivalenceParams();
};

// Closed-form action on (f, g), returned as functions of the old (x, u_x).
std::pair<Expr, Expr> apply_equivalence(const EquivalenceParams& p, const Expr& f, const Expr& g);

PointTransform equivalence_transform(const EquivalenceParams& p);

// The seven one-parameter families, each with its inverse.
namespace elementary {
PointTransform translate_t(const Expr& c0);
PointTransform scale_t(const Expr& c1);
PointTransform change_x(const Expr& phi, const Expr& phi_inverse);
PointTransform scale_u(const Expr& c2);
PointTransform gauge_linear(const Expr& c3);      // u~ = u + c3 t
PointTransform gauge_quadratic(const Expr& c4);   // u~ = u + c4 t^2
PointTransform gauge_x(const Expr& psi);          // u~ = u + psi(x)
}  // namespace elementary

// Generators of the equivalence algebra on the augmented chart.
namespace generator {
VectorField Du();
VectorField Dt();
VectorField Pt();
VectorField D(const Expr& phi);
VectorField G(const Expr& psi);
VectorField F1();
VectorField F2();
}  // namespace generator

}  // namespace wavegc
