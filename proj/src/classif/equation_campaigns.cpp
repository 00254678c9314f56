#include <algorithm>
#include <chrono>

#include "wavegc/classif/campaigns.hpp"
#include "wavegc/expr/names.hpp"
#include "wavegc/expr/parse.hpp"
#include "wavegc/liealg/lie_algebra.hpp"
#include "wavegc/vecfield/transform.hpp"

namespace wavegc {

namespace {

Expr P(const char* s) { return parse(s); }

class Timer {
 public:
  explicit Timer(CaseRecord& r) : r_(r), start_(std::chrono::steady_clock::now()) {}
  ~Timer() { r_.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count(); }

 private:
  CaseRecord& r_;
  std::chrono::steady_clock::time_point start_;
};

CaseRecord record(const char* campaign, const std::string& id, const std::string& title) {
  CaseRecord r;
  r.campaign = campaign;
  r.id = id;
  r.title = title;
  return r;
}

Check outcome_check(const std::string& name, Verdict v, const std::string& detail = {}) {
  Outcome o = from_verdict(v);
  return {name, o, o == Outcome::Pass ? "" : detail};
}

}  // namespace

VerificationReport verify_determining_system() {
  VerificationReport rep;
  CaseRecord rec = record("detsys", "splits", "preliminary splits and reduced rows of the determining system");
  {
    Timer timer(rec);
    DeterminingSystem sys = generate_determining_system();
    auto row = [&](const char* m) -> const DeterminingEquation* { return sys.find(m); };
    auto prop = [&](const std::string& name, const char* mono, const Expr& want, bool eta_linear) {
      const DeterminingEquation* e = row(mono);
      if (!e) return rec.expect(name, false, std::string("no row for ") + mono);
      Expr got = eta_linear ? impose_preliminary(e->equation) : e->equation;
      if (!eta_linear && std::string(mono) == "u_t*u_t") got = impose_preliminary(got, false);
      rec.expect(name, proportional(got, want), "got " + got.str());
    };
    prop("u_tx*u_t: xi_u", "u_tx*u_t", P("xi_u"), false);
    prop("u_tx: xi_t = f*(tau_x + tau_u*u_x)", "u_tx", P("xi_t - f*(tau_x + tau_u*u_x)"), false);
    prop("u_xx*u_t: 2*f*tau_u = (tau_x + tau_u*u_x)*f_ux", "u_xx*u_t", P("2*f*tau_u - (tau_x + tau_u*u_x)*f_ux"),
         false);
    prop("u_t^2: eta_uu", "u_t*u_t", P("eta_uu"), false);
    prop("u_xx row", "u_xx", P("2*(tau_t - xi_x)*f + xi*f_x + (eta_x + (eta_u - xi_x)*u_x)*f_ux"), true);
    prop("u_t row", "u_t", P("2*eta_tu - tau_tt + tau_xx*f + tau_x*g_ux"), true);
    prop("remaining row", "1",
         P("eta_tt - xi_tt*u_x - (eta_xx + (2*eta_xu - xi_xx)*u_x)*f + (eta_u - 2*tau_t)*g - xi*g_x"
           " - (eta_x + (eta_u - xi_x)*u_x)*g_ux"),
         true);

    const std::vector<std::string> known{"u_tx*u_t", "u_tx",  "u_xx*u_t", "u_t*u_t",
                                         "u_xx",     "u_t",   "1",        "u_t*u_t*u_t"};
    std::string extra;
    for (const auto& e : sys.equations) {
      if (std::find(known.begin(), known.end(), e.monomial) != known.end()) continue;
      if (!impose_preliminary(e.equation).is_zero()) extra += " " + e.monomial;
    }
    const DeterminingEquation* cubic = row("u_t*u_t*u_t");
    if (cubic && !impose_preliminary(cubic->equation).is_zero()) extra += " u_t*u_t*u_t";
    rec.expect("no further rows", extra.empty(), extra.empty() ? "" : "unexpected rows:" + extra);
  }
  rep.append(rec);
  return rep;
}

VerificationReport verify_kernel() {
  VerificationReport rep;
  CaseRecord rec = record("kernel", "kernel", "kernel fields with symbolic f, g");
  {
    Timer timer(rec);
    for (const char* q : {"1@t", "1@u", "t@u"}) {
      SymmetryCheck sc = check_symmetry(symbolic_f(), symbolic_g(), parse_field(q, Chart::Base));
      rec.add(outcome_check(std::string("symmetry ") + q, sc.verdict, sc.residual.str()));
    }
    SymmetryCheck sx = check_symmetry(symbolic_f(), symbolic_g(), parse_field("1@x", Chart::Base));
    rec.expect("1@x is not in the kernel", sx.verdict == Verdict::Nonzero, to_string(sx.verdict));
  }
  rep.append(rec);
  return rep;
}

namespace {

int ansatz_dim(const Expr& f, const Expr& g) { return solve_within_ansatz(f, g).dimension; }

Check reduction_check(const std::string& name, const PointTransform& map, const Expr& f, const Expr& g,
                      const Expr& f_target, const Expr& g_target) {
  TransformResult r = transform_equation(map, f, g);
  Verdict v = matches_target(map, r, f_target, g_target);
  std::string detail;
  if (v != Verdict::Zero)
    detail = r.ok ? "f~ = " + r.f_pulled.str() + ", g~ = " + r.g_pulled.str() + " at the image point"
                  : "leaves the class: " + r.reason;
  return {name, from_verdict(v), detail};
}

}  // namespace

VerificationReport verify_reductions() {
  const auto& n = names();
  Expr t(n.t), x(n.x), u(n.u), delta(n.delta);
  VerificationReport rep;

  {
    CaseRecord rec = record("reductions", "a", "case 7 to the x^(-1) form with nu~ = delta - nu*(p+1)");
    Timer timer(rec);
    for (int p : {1, 2})
      for (int nu : {1, 2}) {
        Rational scale = Rational(1) / ipow(Rational(p + 1), p + 1);
        PointTransform map(Expr(scale) * t, exp(-x / Expr(p + 1)), u);
        Expr ap = pow(abs(Expr(n.u_x)), Expr(2 * p));
        Expr f = delta * exp(Expr(2) * x) * ap, g = Expr(nu) * exp(Expr(2) * x) * ap * Expr(n.u_x);
        Expr nut = delta - Expr(nu * (p + 1));
        Expr ft = delta * ap, gt = nut * pow(x, Expr(-1)) * ap * Expr(n.u_x);
        std::string tag = "[p=" + std::to_string(p) + ", nu=" + std::to_string(nu) + "]";
        rec.add(reduction_check("maps to target " + tag, map, f, g, ft, gt));
        Bindings d1{{delta, Expr(1)}};
        int a = ansatz_dim(substitute_plain(f, d1), substitute_plain(g, d1));
        int b = ansatz_dim(substitute_plain(ft, d1), substitute_plain(gt, d1));
        rec.expect("ansatz dimensions agree " + tag, a == b && a == 5,
                   std::to_string(a) + " vs " + std::to_string(b));
      }
    rep.append(rec);
  }

  {
    CaseRecord rec = record("reductions", "b", "case 8 to the case 21 form with coefficient nu - delta");
    Timer timer(rec);
    Expr shift = x * lnabs(x) - x;
    PointTransform map(t, x, u + shift, PointTransform(t, x, u - shift));
    Expr e2 = exp(Expr(2) * Expr(n.u_x));
    Expr f = delta * x * x * e2, g = Expr(n.nu) * x * e2;
    Expr ft = delta * e2, gt = (Expr(n.nu) - delta) * pow(x, Expr(-1)) * e2;
    rec.add(reduction_check("maps to target", map, f, g, ft, gt));
    Bindings s{{delta, Expr(1)}, {Expr(n.nu), Expr(3)}};
    int a = ansatz_dim(substitute_plain(f, s), substitute_plain(g, s));
    int b = ansatz_dim(substitute_plain(ft, s), substitute_plain(gt, s));
    rec.expect("ansatz dimensions agree [delta=1, nu=3]", a == b && a == 5, std::to_string(a) + " vs " + std::to_string(b));
    rep.append(rec);
  }

  {
    CaseRecord rec = record("reductions", "c", "u_x^(-2) equation with g = delta/u_x to case 20 at p = -1");
    Timer timer(rec);
    Expr f = delta * pow(Expr(n.u_x), Expr(-2)), g = delta * pow(Expr(n.u_x), Expr(-1));
    Expr ft = f, gt(0);
    rec.add(reduction_check("printed map x~ = exp(x)", PointTransform(t, exp(x), u), f, g, ft, gt));
    rec.add(reduction_check("map x~ = exp(-x)", PointTransform(t, exp(-x), u), f, g, ft, gt));
    Outcome alg = Outcome::Pass;
    for (const char* q : {"1@t", "1@u", "t@u", "1@x", "exp(x)@x", "t@t + u@u"})
      alg = combine(alg, from_verdict(check_symmetry(f, g, parse_field(q, Chart::Base)).verdict));
    rec.add({"six symmetries incl. exp(x)@x", alg, ""});
    Bindings d1{{delta, Expr(1)}};
    int a = ansatz_dim(substitute_plain(f, d1), substitute_plain(g, d1));
    int b = ansatz_dim(substitute_plain(ft, d1), Expr(0));
    rec.expect("ansatz dimensions agree", a == b && a == 6, std::to_string(a) + " vs " + std::to_string(b));
    rep.append(rec);
  }

  {
    CaseRecord rec = record("reductions", "d", "mu(x) subclass to theta(x) subclass via x~ = phi(x)");
    Timer timer(rec);
    Expr um4 = pow(Expr(n.u_x), Expr(-4)), um3 = pow(Expr(n.u_x), Expr(-3));
    struct Item {
      const char* name;
      int sign;
      Expr mu, phi, phi_inv, theta;
      const char* printed;
    };
    Expr x2 = x * x;
    std::vector<Item> items{
        {"mu=1, upper sign", 1, Expr(1), -exp(-x), -lnabs(x), pow(abs(x), Expr(-2)), ""},
        {"mu=1, lower sign", -1, Expr(1), exp(x), lnabs(x), -pow(abs(x), Expr(-2)), ""},
        {"mu=2/x, upper sign (p=-2)", 1, Expr(2) / x, Expr(-1) / x, Expr(-1) / x, pow(abs(x), Expr(-4)),
         "printed p = nu/(nu-1) = 2"},
        {"mu=2/x, lower sign (p=-2/3)", -1, Expr(2) / x, x2 * x, Expr(0),
         -Expr(Rational(1, 9)) * pow(abs(x), Expr(Rational(-4, 3))), "printed p = nu/(nu+1) = 2/3"},
    };
    for (const auto& it : items) {
      Expr s(it.sign);
      // phi_xx + sign*mu*phi_x = 0 makes the u_x^(-3) term vanish.
      Expr ode = diff(it.phi, n.x, 2) + s * it.mu * diff(it.phi, n.x);
      Check c = zero_check(std::string("phi solves its ODE, ") + it.name, ode);
      rec.add(c);
      PointTransform map = it.phi_inv.is_zero() ? PointTransform(t, it.phi, u)
                                                : PointTransform(t, it.phi, u, PointTransform(t, it.phi_inv, u));
      Check m = reduction_check(std::string("maps to theta form, ") + it.name, map, s * um4, it.mu * um3,
                                it.theta * um4, Expr(0));
      if (*it.printed) m.detail = m.detail.empty() ? std::string(it.printed) + " does not match" : m.detail;
      rec.add(m);
    }
    // The nu x^(-1) extension maps into the p = -2 algebra.
    PointTransform map(t, Expr(-1) / x, u, PointTransform(t, Expr(-1) / x, u));
    VectorField pushed = pushforward(map, parse_field("2*x@x + u@u", Chart::Base));
    std::vector<VectorField> target = kernel_fields();
    for (const char* q : {"t^2@t + t*u@u", "2*t@t + u@u", "2*x@x - u@u"}) target.push_back(parse_field(q, Chart::Base));
    rec.expect("2*x@x + u@u maps into the theta = |x|^(-4) algebra", field_coordinates(target, pushed).has_value(),
               pushed.str());
    rep.append(rec);
  }

  {
    CaseRecord rec = record("reductions", "gauges", "identity and u~ = u - t^2/2 reductions");
    Timer timer(rec);
    Expr ap = pow(abs(Expr(n.u_x)), Expr(2) * Expr(n.p));
    rec.add(reduction_check("identity keeps case 20", PointTransform::identity(), delta * ap, 0, delta * ap, 0));
    PointTransform shift(t, x, u - t * t / Expr(2), PointTransform(t, x, u + t * t / Expr(2)));
    rec.add(reduction_check("case 14 at q=0 to case 20", shift, delta * ap, 1, delta * ap, 0));
    Expr e2 = exp(Expr(2) * Expr(n.u_x));
    rec.add(reduction_check("case 13 at q=0 to case 21", shift, delta * e2, 1, delta * e2, 0));
    rep.append(rec);
  }
  return rep;
}

VerificationReport verify_potential_link() {
  const auto& n = names();
  Expr x(n.x), v(n.v), w(n.w), ux(n.u_x), ut(n.u_t);
  Expr vx(Symbol::jet(n.v, 0, 1)), vt(Symbol::jet(n.v, 1, 0)), vtt(Symbol::jet(n.v, 2, 0));
  Expr wt(Symbol::jet(n.w, 1, 0));
  VerificationReport rep;

  auto run = [&](const std::string& id, const Expr& fv, const Expr& gv, const Expr& fu, const Expr& gu) {
    CaseRecord rec = record("potential", id, "potential system and the telegraph form");
    Timer timer(rec);
    Expr flux = fv * vx + gv;
    Expr wave = Expr(n.u_tt) - fu * Expr(n.u_xx) - gu;
    // u_x = v, u_t = w, w_t = f(x,v) v_x + g(x,v)
    Expr forward = substitute(wt - flux, {{v, ux}, {w, ut}});
    rec.add(zero_check("forward: eliminating v, w gives the wave equation", forward - wave));
    // w_x = v_t, w_t = flux: compatibility is the telegraph equation
    Expr compat = total_derivative(flux, Direction::X) - total_derivative(vt, Direction::T);
    Expr telegraph = vtt - total_derivative(flux, Direction::X);
    rec.add(zero_check("first-level system compatibility", compat + telegraph));
    Expr backward = substitute(total_derivative(wave, Direction::X), {{ux, v}});
    rec.add(zero_check("backward: D_x of the wave equation with u_x -> v", backward - telegraph));
    rep.append(rec);
  };
  run("symbolic", Expr::func(n.f, {x, v}), Expr::func(n.g, {x, v}), symbolic_f(), symbolic_g());
  run("constant", Expr(n.k), Expr(n.b), Expr(n.k), Expr(n.b));

  // The induced v-coefficient eta_x + (eta_u - xi_x) u_x is free of u for every catalog generator.
  CaseRecord rec = record("potential", "induced", "symmetries induce fields in (t, x, v)");
  {
    Timer timer(rec);
    for (const auto& c : builtin_catalog())
      for (std::size_t i = 0; i < c.generators.size(); ++i) {
        const VectorField& q = c.generators[i];
        Expr coef = diff(q.coeff(2), n.x) + (diff(q.coeff(2), n.u) - diff(q.coeff(1), n.x)) * ux;
        Check ch = zero_check(c.id + ": " + c.generator_text[i], diff(coef, n.u));
        if (ch.outcome != Outcome::Pass) rec.add(ch);
      }
    rec.expect("all catalog generators", rec.checks.empty());
  }
  rep.append(rec);
  return rep;
}

}  // namespace wavegc
