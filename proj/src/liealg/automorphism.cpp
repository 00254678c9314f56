#include "wavegc/liealg/automorphism.hpp"

#include <algorithm>

namespace wavegc {

Symbol automorphism_entry(int i, int j) {
  return Symbol::parameter("a" + std::to_string(i) + std::to_string(j));
}

Expr AutomorphismFamily::reduce(const Expr& relation) const {
  return numerator(substitute_plain(relation, [&] {
    Bindings b;
    for (const auto& [s, v] : solved) b.emplace_back(Expr(s), v);
    return b;
  }()));
}

namespace {

struct Var {
  Symbol s;
  int i, j;
  bool diagonal() const { return i == j; }
};

// Coefficient is a nonzero constant times a product of diagonal entries.
bool invertible_coefficient(const Expr& c, const std::vector<Var>& vars) {
  if (c.is_zero()) return false;
  if (terms_of(c).size() != 1) return false;
  for (auto* si : c.free_symbols()) {
    auto it = std::find_if(vars.begin(), vars.end(), [&](const Var& v) { return v.s.ptr() == si; });
    if (it == vars.end() || !it->diagonal()) return false;
  }
  return true;
}

// Removes powers of diagonal entries common to every term.
Expr strip_diagonal_content(const Expr& e, const std::vector<Var>& vars) {
  auto terms = terms_of(e);
  Expr divisor(1);
  for (const auto& v : vars) {
    if (!v.diagonal()) continue;
    Rational common = -1;
    for (const auto& t : terms) {
      Rational k = collect(t, {v.s}).parts.rbegin()->first[0];
      common = common < 0 ? k : std::min(common, k);
    }
    if (common > 0) divisor = divisor * pow(Expr(v.s), Expr(common));
  }
  return divisor.is_one() ? e : normalize(e / divisor);
}

}  // namespace

AutomorphismFamily flag_automorphism_solve(const LieAlgebra& a, const std::vector<Subspace>& flag) {
  int n = a.dim();
  if (n > 6) throw PresentationError("automorphism solving is limited to dimension 6");
  if (static_cast<int>(flag.size()) != n) throw PresentationError("flag must be a full chain");
  AutomorphismFamily fam;
  for (int k = 0; k < n; ++k) {
    const Subspace& v = flag[k];
    if (v.ambient() != n || v.dim() != k + 1) throw PresentationError("flag member " + std::to_string(k + 1) + " has wrong dimension");
    if (k > 0 && !v.contains(flag[k - 1])) throw PresentationError("flag is not nested");
    for (const auto& r : v.rows())
      if (k == 0 || !flag[k - 1].contains(r)) {
        fam.basis.push_back(r);
        break;
      }
  }
  std::vector<std::string> labels;
  for (int k = 0; k < n; ++k) labels.push_back("b" + std::to_string(k + 1));
  LieAlgebra b = a.rebase(fam.basis, labels);

  std::vector<Var> vars;
  std::vector<std::vector<Expr>> A(n, std::vector<Expr>(n, Expr(0)));
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      Symbol s = automorphism_entry(i + 1, j + 1);
      vars.push_back({s, i + 1, j + 1});
      A[i][j] = Expr(s);
    }

  std::vector<Expr> eqs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int r = 0; r < n; ++r) {
        Expr lhs(0), rhs(0);
        const QVec& cij = b.structure(i, j);
        for (int k = 0; k < n; ++k)
          if (cij[k] != 0) lhs = lhs + Expr(cij[k]) * A[r][k];
        for (int p = 0; p <= i; ++p)
          for (int q = 0; q <= j; ++q) {
            if (p == q) continue;
            Rational c = b.structure(p, q)[r];
            if (c != 0) rhs = rhs + Expr(c) * A[p][i] * A[q][j];
          }
        Expr e = numerator(lhs - rhs);
        if (!e.is_zero()) eqs.push_back(e);
      }

  Bindings solved;
  auto rank_var = [](const Var& v) { return std::pair{v.diagonal() ? 1 : 0, v.i * 10 + v.j}; };
  while (true) {
    std::vector<Expr> live;
    for (const auto& e : eqs) {
      Expr r = numerator(substitute_plain(e, solved));
      if (!r.is_zero()) live.push_back(strip_diagonal_content(r, vars));
    }
    eqs = live;
    if (eqs.empty()) break;
    std::sort(eqs.begin(), eqs.end(), [](const Expr& x, const Expr& y) {
      auto nx = terms_of(x).size(), ny = terms_of(y).size();
      return nx != ny ? nx < ny : ExprLess()(x, y);
    });
    bool progress = false;
    for (const auto& e : eqs) {
      const Var* best = nullptr;
      Expr best_val;
      for (const auto& v : vars) {
        if (!e.has(v.s)) continue;
        Collected c = collect(e, {v.s});
        if (c.parts.rbegin()->first[0] != 1) continue;
        Expr coef = c.parts.rbegin()->second;
        if (!invertible_coefficient(coef, vars)) continue;
        if (best && rank_var(*best) <= rank_var(v)) continue;
        Expr rest = c.parts.count({0}) ? c.parts.at({0}) : Expr(0);
        best = &v;
        best_val = normalize(-rest / coef);
      }
      if (!best) continue;
      for (auto& [k, val] : solved) val = normalize(substitute_plain(val, {{Expr(best->s), best_val}}));
      solved.emplace_back(Expr(best->s), best_val);
      progress = true;
      break;
    }
    if (!progress) {
      fam.unresolved = eqs;
      break;
    }
  }

  for (const auto& [k, v] : solved) fam.solved.emplace_back(k.symbol(), v);
  fam.matrix = A;
  for (auto& row : fam.matrix)
    for (auto& e : row) e = normalize(substitute_plain(e, solved));
  for (const auto& v : vars)
    if (std::none_of(solved.begin(), solved.end(), [&](const auto& kv) { return kv.first.symbol() == v.s; }))
      fam.free.push_back(v.s);

  for (unsigned mask = 1; mask + 1 < (1u << n); ++mask) {
    bool invariant = true;
    for (int j = 0; j < n && invariant; ++j) {
      if (!(mask >> j & 1)) continue;
      for (int i = 0; i < n; ++i)
        if (!(mask >> i & 1) && !fam.matrix[i][j].is_zero()) {
          invariant = false;
          break;
        }
    }
    if (!invariant) continue;
    QMat rows;
    for (int j = 0; j < n; ++j)
      if (mask >> j & 1) rows.push_back(fam.basis[j]);
    fam.invariant_subspaces.push_back(Subspace::span(n, rows));
  }
  return fam;
}

}  // namespace wavegc
