#include "wavegc/vecfield/transform.hpp"

#include <algorithm>

#include "wavegc/expr/names.hpp"

namespace wavegc {

namespace {

bool depends_only_on(const Expr& e, const std::vector<Symbol>& allowed) {
  for (auto* si : e.free_symbols()) {
    Symbol s(si);
    if (s.kind() == SymbolKind::Parameter) continue;
    if (std::find(allowed.begin(), allowed.end(), s) == allowed.end()) return false;
  }
  return true;
}

bool structurally_zero(const Expr& e) { return numerator(e).is_zero(); }

}  // namespace

PointTransform::PointTransform(Expr T, Expr X, Expr U)
    : T_(normalize(std::move(T))), X_(normalize(std::move(X))), U_(normalize(std::move(U))) {
  const auto& n = names();
  if (!depends_only_on(T_, {n.t})) throw TransformError("T must depend on t only: " + T_.str());
  if (!depends_only_on(X_, {n.x})) throw TransformError("X must depend on x only: " + X_.str());
  if (!depends_only_on(U_, {n.t, n.x, n.u})) throw TransformError("U must depend on t, x, u only: " + U_.str());
  if (!structurally_zero(diff(U_, n.u, 2))) throw TransformError("U is not affine in u: " + U_.str());
  if (structurally_zero(diff(T_, n.t))) throw TransformError("T_t vanishes");
  if (structurally_zero(diff(X_, n.x))) throw TransformError("X_x vanishes");
  if (structurally_zero(diff(U_, n.u))) throw TransformError("U_u vanishes");
}

PointTransform::PointTransform(Expr T, Expr X, Expr U, PointTransform inverse)
    : PointTransform(std::move(T), std::move(X), std::move(U)) {
  inv_ = std::make_shared<const PointTransform>(std::move(inverse));
}

PointTransform PointTransform::identity() {
  const auto& n = names();
  PointTransform id(Expr(n.t), Expr(n.x), Expr(n.u));
  return PointTransform(Expr(n.t), Expr(n.x), Expr(n.u), id);
}

PointTransform PointTransform::inverse() const {
  if (!inv_) throw TransformError("inverse not available for " + str());
  return PointTransform(inv_->T_, inv_->X_, inv_->U_, PointTransform(T_, X_, U_));
}

Expr PointTransform::slope() const {
  const auto& n = names();
  return (diff(U_, n.x) + diff(U_, n.u) * Expr(n.u_x)) / diff(X_, n.x);
}

PointTransform PointTransform::after(const PointTransform& inner) const {
  const auto& n = names();
  auto compose = [&](const PointTransform& a, const PointTransform& b) {
    Expr T = substitute_plain(a.T_, {{Expr(n.t), b.T_}});
    Expr X = substitute_plain(a.X_, {{Expr(n.x), b.X_}});
    Expr U = substitute_plain(a.U_, {{Expr(n.t), b.T_}, {Expr(n.x), b.X_}, {Expr(n.u), b.U_}});
    return PointTransform(T, X, U);
  };
  PointTransform fwd = compose(*this, inner);
  if (inv_ && inner.inv_) fwd.inv_ = std::make_shared<const PointTransform>(compose(*inner.inv_, *inv_));
  return fwd;
}

std::string PointTransform::str() const { return "(t~=" + T_.str() + ", x~=" + X_.str() + ", u~=" + U_.str() + ")"; }

Symbol new_slope_t() {
  static Symbol s = Symbol::auxiliary("Ut");
  return s;
}
Symbol new_slope_x() {
  static Symbol s = Symbol::auxiliary("Ux");
  return s;
}
Symbol new_curvature_xx() {
  static Symbol s = Symbol::auxiliary("Uxx");
  return s;
}

TransformResult transform_equation(const PointTransform& P, const Expr& f, const Expr& g) {
  const auto& n = names();
  Expr t(n.t), x(n.x), u(n.u), ux(n.u_x);
  Expr Ut(new_slope_t()), Ux(new_slope_x()), Uxx(new_curvature_xx());
  const Expr &T = P.T(), &X = P.X(), &U = P.U();

  Expr Tt = diff(T, n.t), Ttt = diff(Tt, n.t);
  Expr Xx = diff(X, n.x), Xxx = diff(Xx, n.x);
  Expr Uu = diff(U, n.u);
  Expr U_t = diff(U, n.t), U_x = diff(U, n.x);
  Expr U_tt = diff(U_t, n.t), U_xx = diff(U_x, n.x);
  Expr U_tu = diff(U_t, n.u), U_xu = diff(U_x, n.u);

  // Old derivatives in terms of the new ones.
  Expr ut_old = (Tt * Ut - U_t) / Uu;
  Expr ux_old = (Xx * Ux - U_x) / Uu;
  Expr uxx_old = (Xx * Xx * Uxx + Ux * Xxx - U_xx - Expr(2) * U_xu * ux_old) / Uu;

  Expr f_old = substitute_plain(f, {{ux, ux_old}});
  Expr g_old = substitute_plain(g, {{ux, ux_old}});
  // u~_t~t~ after substituting u_tt = f u_xx + g.
  Expr rhs = (U_tt + Expr(2) * U_tu * ut_old + Uu * (f_old * uxx_old + g_old) - Ut * Ttt) / (Tt * Tt);

  TransformResult r;
  r.f_mixed = normalize(diff(rhs, new_curvature_xx()));
  r.g_mixed = normalize(substitute_plain(rhs, {{Uxx, Expr(0)}}));

  r.ok = true;
  for (const Expr* part : {&r.f_mixed, &r.g_mixed}) {
    for (Symbol s : {n.t, n.u, new_slope_t()}) {
      Expr d = diff(*part, s);
      if (structurally_zero(d)) continue;
      auto zt = zero_test(d);
      if (zt.verdict == Verdict::Zero) continue;
      r.ok = false;
      if (zt.verdict == Verdict::Undecided) r.verdict = Verdict::Undecided;
      else if (r.verdict != Verdict::Undecided) r.verdict = Verdict::Nonzero;
      if (r.reason.empty()) {
        r.obstruction = d;
        r.reason = std::string(part == &r.f_mixed ? "f~" : "g~") + " depends on " +
                   (s == new_slope_t() ? std::string("u~_t~") : s.name());
      }
    }
  }

  Expr slope = P.slope();
  r.f_pulled = normalize(substitute_plain(r.f_mixed, {{Ux, slope}}));
  r.g_pulled = normalize(substitute_plain(r.g_mixed, {{Ux, slope}}));
  if (P.has_inverse()) {
    Bindings to_new{{x, P.inverse().X()}, {Ux, ux}};
    r.f_new = normalize(substitute_plain(r.f_mixed, to_new));
    r.g_new = normalize(substitute_plain(r.g_mixed, to_new));
  }
  return r;
}

Verdict matches_target(const PointTransform& P, const TransformResult& r, const Expr& f_target,
                       const Expr& g_target) {
  if (!r.ok) return r.verdict == Verdict::Undecided ? Verdict::Undecided : Verdict::Nonzero;
  const auto& n = names();
  Bindings along{{Expr(n.x), P.X()}, {Expr(n.u_x), Expr(new_slope_x())}};
  Verdict worst = Verdict::Zero;
  for (auto [got, want] : {std::pair{r.f_mixed, f_target}, std::pair{r.g_mixed, g_target}}) {
    Expr d = got - substitute_plain(want, along);
    if (structurally_zero(d)) continue;
    Verdict v = zero_test(d).verdict;
    if (v == Verdict::Nonzero) return v;
    if (v == Verdict::Undecided) worst = v;
  }
  return worst;
}

std::vector<Expr> lift(const PointTransform& P) {
  const auto& n = names();
  TransformResult r = transform_equation(P, Expr(n.fc), Expr(n.gc));
  if (!r.ok) throw TransformError("transform does not preserve the class: " + r.reason);
  return {P.T(), P.X(), P.U(), P.slope(), r.f_pulled, r.g_pulled};
}

VectorField pushforward(const PointTransform& P, const VectorField& V) {
  if (V.chart() == Chart::Jet2) throw ChartError("pushforward is defined on the base and augmented charts");
  const auto& coords = chart_coordinates(V.chart());
  std::vector<Expr> Y = lift(P);
  std::vector<Expr> back = lift(P.inverse());
  Y.resize(coords.size());
  Bindings to_new;
  for (std::size_t i = 0; i < coords.size(); ++i) to_new.emplace_back(Expr(coords[i]), back[i]);
  std::vector<Expr> out;
  out.reserve(coords.size());
  for (const auto& y : Y) out.push_back(substitute_plain(V.apply(y), to_new));
  // The u_x entry is rebuilt from (tau, xi, eta). Comparing it with the lifted one would reject maps
  // whose inverse is only valid on part of the line, such as x~ = exp(x) with x = lnabs(x~).
  if (V.chart() == Chart::Augmented) return VectorField::augmented(out[0], out[1], out[2], out[4], out[5]);
  return VectorField(Chart::Base, std::move(out));
}

}  // namespace wavegc
