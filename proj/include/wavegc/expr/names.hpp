#pragma once

#include "wavegc/expr/symbol.hpp"

namespace wavegc {

inline constexpr int kMaxParseOrder = 4;

// The fixed vocabulary shared by all modules.
struct Names {
  Symbol t, x, u, v, w;
  Symbol u_t, u_x, u_tt, u_tx, u_xx;
  Symbol fc, gc;  // f, g as coordinates of the augmented chart
  Symbol p, q, nu, d, b, k;
  Symbol delta, eps, eps2;
  Symbol c0, c1, c2, c3, c4;
  Symbol z;  // slot of the unary functions F, G, phi, ...
  Function f, g;              // f(x,u_x), g(x,u_x)
  Function F, G;              // F(z), G(z)
  Function phi, psi, mu, theta, thetahat, alpha, beta;  // functions of x
  Function tau, xi, eta;      // tau(t,x,u), ...
};

const Names& names();

}  // namespace wavegc
