#pragma once

#include <memory>
#include <optional>
#include <string>

#include "wavegc/expr/zero_test.hpp"
#include "wavegc/vecfield/vector_field.hpp"

namespace wavegc {

class TransformError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Fiber-preserving map t~ = T(t), x~ = X(x), u~ = U(t,x,u) with U affine in u.
// The inverse, when known, is written in the same standard symbols (t, x, u standing for t~, x~, u~).
class PointTransform {
 public:
  PointTransform(Expr T, Expr X, Expr U);
  PointTransform(Expr T, Expr X, Expr U, PointTransform inverse);

  static PointTransform identity();

  const Expr& T() const { return T_; }
  const Expr& X() const { return X_; }
  const Expr& U() const { return U_; }
  bool has_inverse() const { return static_cast<bool>(inv_); }
  PointTransform inverse() const;  // its own inverse is this map

  // u~_x~ as a function of (t, x, u, u_x)
  Expr slope() const;

  // this after inner
  PointTransform after(const PointTransform& inner) const;

  std::string str() const;

 private:
  Expr T_, X_, U_;
  std::shared_ptr<const PointTransform> inv_;
};

// Symbols standing for the new first and second derivatives u~_t~, u~_x~, u~_x~x~.
Symbol new_slope_t();
Symbol new_slope_x();
Symbol new_curvature_xx();

struct TransformResult {
  bool ok = false;
  // f~, g~ as functions of the old x and the new slope symbol new_slope_x().
  Expr f_mixed, g_mixed;
  // f~, g~ pulled back to (x, u_x): the values the new arbitrary elements take at the image point.
  Expr f_pulled, g_pulled;
  // f~, g~ in the new coordinates, named x and u_x; present when the inverse of X is known.
  std::optional<Expr> f_new, g_new;
  Expr obstruction;  // a nonzero residual when !ok
  std::string reason;
  Verdict verdict = Verdict::Zero;  // Undecided when the class test could not be decided
};

TransformResult transform_equation(const PointTransform& P, const Expr& f, const Expr& g);

// Compares a transform result with a target equation given in new coordinates (x, u_x standing for
// x~, u~_x~). Works without an inverse by composing the target with X.
Verdict matches_target(const PointTransform& P, const TransformResult& r, const Expr& f_target, const Expr& g_target);

// Components of P lifted to the augmented chart (t, x, u, u_x, f, g) as functions of the old coordinates.
std::vector<Expr> lift(const PointTransform& P);

// Push-forward of V under P, in new coordinates. Requires P.inverse().
VectorField pushforward(const PointTransform& P, const VectorField& V);

}  // namespace wavegc
