#include "wavegc/detsys/detsys.hpp"

#include <functional>
#include <map>
#include <set>

#include "wavegc/expr/names.hpp"
#include "wavegc/expr/parse.hpp"
#include "wavegc/liealg/linear.hpp"

namespace wavegc {

Expr symbolic_f() { return Expr::func(names().f); }
Expr symbolic_g() { return Expr::func(names().g); }

Expr invariance_residual(const VectorField& Q, const Expr& f, const Expr& g) {
  const auto& n = names();
  if (Q.chart() != Chart::Base) throw ChartError("invariance_residual expects a base-chart field");
  Expr L = Expr(n.u_tt) - f * Expr(n.u_xx) - g;
  Expr r = prolong2(Q).apply(L);
  return normalize(substitute_plain(r, {{Expr(n.u_tt), f * Expr(n.u_xx) + g}}));
}

const DeterminingEquation* DeterminingSystem::find(const std::string& monomial) const {
  for (const auto& e : equations)
    if (e.monomial == monomial) return &e;
  return nullptr;
}

std::string DeterminingSystem::str() const {
  std::string out;
  for (const auto& e : equations) out += e.monomial + ": " + e.equation.pretty() + " = 0\n";
  return out;
}

DeterminingSystem generate_determining_system() {
  const auto& n = names();
  VectorField Q = VectorField::base(Expr::func(n.tau), Expr::func(n.xi), Expr::func(n.eta));
  Expr r = invariance_residual(Q, symbolic_f(), symbolic_g());
  DeterminingSystem sys;
  sys.split_vars = {n.u_t, n.u_tx, n.u_xx};
  Collected c = collect(r, sys.split_vars);
  // Highest total degree first, in the order the splits are used.
  std::vector<std::pair<std::vector<int>, Expr>> parts(c.parts.begin(), c.parts.end());
  std::stable_sort(parts.begin(), parts.end(), [](const auto& a, const auto& b) {
    int da = a.first[0] + a.first[1] + a.first[2], db = b.first[0] + b.first[1] + b.first[2];
    return da > db;
  });
  for (auto& [k, v] : parts) {
    if (v.is_zero()) continue;
    std::string mono;
    // u_tx and u_xx before u_t, matching the usual reading "u_tx*u_t"
    for (int idx : {1, 2, 0}) {
      for (int p = 0; p < k[idx]; ++p) mono += (mono.empty() ? "" : "*") + sys.split_vars[idx].name();
    }
    if (mono.empty()) mono = "1";
    sys.equations.push_back({k, mono, v});
  }
  return sys;
}

namespace {

void collect_funcs(const Expr& e, std::set<Expr, ExprLess>& out) {
  if (e.kind() == Kind::Func) out.insert(e);
  for (const auto& op : e.ops()) collect_funcs(op, out);
}

}  // namespace

Expr impose_preliminary(const Expr& e, bool eta_linear) {
  const auto& n = names();
  std::set<Expr, ExprLess> funcs;
  collect_funcs(e, funcs);
  Bindings zero;
  for (const auto& fn : funcs) {
    Function f = fn.function();
    if (fn.deriv().size() != 3) continue;
    int du = fn.deriv()[2];
    if (((f == n.tau || f == n.xi) && du >= 1) || (eta_linear && f == n.eta && du >= 2)) zero.emplace_back(fn, Expr(0));
  }
  return normalize(substitute_plain(e, zero));
}

bool proportional(const Expr& a, const Expr& b) {
  auto sa = rational_split(a), sb = rational_split(b);
  if (sa.size() != sb.size()) return false;
  if (sa.empty()) return true;
  Rational ratio = 0;
  std::map<Expr, Rational, ExprLess> mb;
  for (const auto& [m, q] : sb) mb[m] = q;
  for (const auto& [m, q] : sa) {
    auto it = mb.find(m);
    if (it == mb.end()) return false;
    Rational r = q / it->second;
    if (ratio == 0) ratio = r;
    else if (r != ratio) return false;
  }
  return true;
}

SymmetryCheck check_symmetry(const Expr& f, const Expr& g, const VectorField& Q) {
  SymmetryCheck sc;
  sc.residual = invariance_residual(Q.project(Chart::Base), f, g);
  if (numerator(sc.residual).is_zero()) {
    sc.verdict = Verdict::Zero;
    sc.log = "structurally zero";
    return sc;
  }
  auto zt = zero_test(sc.residual);
  sc.verdict = zt.verdict;
  for (const auto& line : zt.log) sc.log += (sc.log.empty() ? "" : "; ") + line;
  return sc;
}

AnsatzBasis AnsatzBasis::standard() {
  auto P = [](std::initializer_list<const char*> xs) {
    std::vector<Expr> out;
    for (const char* s : xs) out.push_back(parse(s));
    return out;
  };
  AnsatzBasis b;
  b.tau = P({"1", "t", "t^2"});
  b.xi = P({"1", "x", "x^2", "exp(x)", "exp(2*x)", "exp(-x)"});
  b.eta = P({"u", "t*u", "1", "t", "t^2", "x", "t*x", "t^2*x", "x^2", "exp(x)", "x*lnabs(x)"});
  return b;
}

AnsatzSolution solve_within_ansatz(const Expr& f, const Expr& g, const AnsatzBasis& basis) {
  std::vector<VectorField> fields;
  for (const auto& b : basis.tau) fields.push_back(VectorField::base(b, 0, 0));
  for (const auto& b : basis.xi) fields.push_back(VectorField::base(0, b, 0));
  for (const auto& b : basis.eta) fields.push_back(VectorField::base(0, 0, b));
  int m = static_cast<int>(fields.size());

  std::vector<Symbol> coeffs;
  Expr total(0);
  for (int k = 0; k < m; ++k) {
    coeffs.push_back(Symbol::auxiliary("ansatz" + std::to_string(k)));
    total = total + Expr(coeffs[k]) * invariance_residual(fields[k], f, g);
  }
  Expr num = numerator(total);

  std::map<Expr, QVec, ExprLess> rows;
  for (const auto& term : terms_of(num)) {
    if (term.is_zero()) continue;
    int which = -1;
    for (int k = 0; k < m; ++k)
      if (term.has(coeffs[k])) {
        if (which >= 0) throw AnsatzError("ansatz residual is not linear in the coefficients");
        which = k;
      }
    if (which < 0) throw AnsatzError("ansatz residual has a term free of the coefficients: " + term.str());
    Expr rest = diff(term, coeffs[which]);
    if (rest.has(coeffs[which])) throw AnsatzError("ansatz residual is not linear in the coefficients");
    for (const auto& [mono, q] : rational_split(rest)) {
      auto& row = rows.try_emplace(mono, QVec(m, Rational(0))).first->second;
      row[which] += q;
    }
  }
  QMat sys;
  for (auto& [mono, row] : rows)
    if (!is_zero(row)) sys.push_back(row);

  AnsatzSolution sol;
  sol.equations = static_cast<int>(sys.size());
  QMat ns = rref(nullspace(sys, m));
  sol.dimension = static_cast<int>(ns.size());
  for (const auto& v : ns) {
    VectorField q(Chart::Base);
    for (int k = 0; k < m; ++k)
      if (v[k] != 0) q = q + Expr(v[k]) * fields[k];
    sol.checks.push_back(check_symmetry(f, g, q));
    sol.basis.push_back(q);
  }
  return sol;
}

std::string simplified_system_violation(const VectorField& Q0) {
  const auto& n = names();
  VectorField Q = Q0.project(Chart::Base);
  const Expr &tau = Q.coeff(0), &xi = Q.coeff(1), &eta = Q.coeff(2);
  auto d = [](const Expr& e, std::initializer_list<Symbol> vs) {
    Expr r = e;
    for (Symbol s : vs) r = diff(r, s);
    return r;
  };
  std::vector<std::pair<const char*, Expr>> rel{
      {"tau_u", d(tau, {n.u})},
      {"tau_x", d(tau, {n.x})},
      {"xi_u", d(xi, {n.u})},
      {"xi_t", d(xi, {n.t})},
      {"eta_uu", d(eta, {n.u, n.u})},
      {"eta_xu", d(eta, {n.x, n.u})},
      {"eta_ttx", d(eta, {n.t, n.t, n.x})},
      {"tau_ttt", d(tau, {n.t, n.t, n.t})},
      {"2*eta_tu - tau_tt", Expr(2) * d(eta, {n.t, n.u}) - d(tau, {n.t, n.t})},
  };
  for (const auto& [name, e] : rel) {
    if (numerator(e).is_zero()) continue;
    if (is_zero(e) != Verdict::Zero) return name;
  }
  return {};
}

}  // namespace wavegc
