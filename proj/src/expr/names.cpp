#include "wavegc/expr/names.hpp"

namespace wavegc {

const Names& names() {
  static const Names n = [] {
    Names r;
    r.t = Symbol::independent("t");
    r.x = Symbol::independent("x");
    r.u = Symbol::dependent("u");
    r.v = Symbol::dependent("v");
    r.w = Symbol::dependent("w");
    r.u_t = Symbol::jet(r.u, 1, 0);
    r.u_x = Symbol::jet(r.u, 0, 1);
    r.u_tt = Symbol::jet(r.u, 2, 0);
    r.u_tx = Symbol::jet(r.u, 1, 1);
    r.u_xx = Symbol::jet(r.u, 0, 2);
    r.fc = Symbol::element("f");
    r.gc = Symbol::element("g");
    r.p = Symbol::parameter("p");
    r.q = Symbol::parameter("q");
    r.nu = Symbol::parameter("nu");
    r.d = Symbol::parameter("d");
    r.b = Symbol::parameter("b");
    r.k = Symbol::parameter("k");
    r.delta = Symbol::parameter("delta", Constraint::SignUnit);
    r.eps = Symbol::parameter("eps", Constraint::Idempotent);
    r.eps2 = Symbol::parameter("epsilon", Constraint::SignUnit);
    r.c0 = Symbol::parameter("c0");
    r.c1 = Symbol::parameter("c1");
    r.c2 = Symbol::parameter("c2");
    r.c3 = Symbol::parameter("c3");
    r.c4 = Symbol::parameter("c4");
    r.z = Symbol::auxiliary("z");
    r.f = Function::declare("f", {r.x, r.u_x});
    r.g = Function::declare("g", {r.x, r.u_x});
    r.F = Function::declare("F", {r.z});
    r.G = Function::declare("G", {r.z});
    r.phi = Function::declare("phi", {r.x});
    r.psi = Function::declare("psi", {r.x});
    r.mu = Function::declare("mu", {r.x});
    r.theta = Function::declare("theta", {r.x});
    r.thetahat = Function::declare("thetahat", {r.x});
    Function::link_inverse(r.theta, r.thetahat);
    r.alpha = Function::declare("alpha", {r.x});
    r.beta = Function::declare("beta", {r.x});
    r.tau = Function::declare("tau", {r.t, r.x, r.u});
    r.xi = Function::declare("xi", {r.t, r.x, r.u});
    r.eta = Function::declare("eta", {r.t, r.x, r.u});
    return r;
  }();
  return n;
}

}  // namespace wavegc
