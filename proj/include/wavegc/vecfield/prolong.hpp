#pragma once

#include "wavegc/vecfield/vector_field.hpp"

namespace wavegc {

struct ProlongedField {
  VectorField base;
  Expr eta_t, eta_x, eta_tt, eta_tx, eta_xx;

  // As a field on the second-order jet chart.
  VectorField as_field() const;
  Expr apply(const Expr& F) const { return as_field().apply(F); }
};

ProlongedField prolong2(const VectorField& q);

}  // namespace wavegc
