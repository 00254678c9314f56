#include "wavegc/expr/expr.hpp"

#include <algorithm>
#include <functional>

#include "wavegc/expr/calculus.hpp"

namespace wavegc {

namespace {

constexpr std::size_t kMix = 0x9e3779b97f4a7c15ULL;

inline void mix(std::size_t& h, std::size_t v) { h ^= v + kMix + (h << 6) + (h >> 2); }

template <class T>
void merge_sorted(std::vector<T>& into, const std::vector<T>& add) {
  if (add.empty()) return;
  if (into.empty()) {
    into = add;
    return;
  }
  std::vector<T> out;
  out.reserve(into.size() + add.size());
  std::set_union(into.begin(), into.end(), add.begin(), add.end(), std::back_inserter(out));
  into.swap(out);
}

std::shared_ptr<Node> new_node(Kind k) {
  auto n = std::make_shared<Node>();
  n->kind = k;
  return n;
}

Expr finish(std::shared_ptr<Node> n, bool canonical) {
  std::size_t h = (static_cast<std::size_t>(n->kind) + 1) * 1315423911ULL;
  switch (n->kind) {
    case Kind::Const:
    case Kind::Mul:
      mix(h, hash_value(n->num));
      break;
    case Kind::Sym:
      mix(h, n->sym.info().name_hash);
      n->free_syms.push_back(n->sym.ptr());
      break;
    case Kind::Func:
      mix(h, n->fn.info().name_hash);
      for (auto d : n->deriv) mix(h, d);
      n->free_funcs.push_back(n->fn.ptr());
      break;
    default:
      break;
  }
  bool canon = canonical;
  for (const auto& op : n->ops) {
    mix(h, op.hash());
    merge_sorted(n->free_syms, op.node()->free_syms);
    merge_sorted(n->free_funcs, op.node()->free_funcs);
    canon = canon && op.canonical();
  }
  n->hash = h;
  n->canonical = canon;
  return Expr(std::shared_ptr<const Node>(std::move(n)));
}

Expr make_const(const Rational& q) {
  auto n = new_node(Kind::Const);
  n->num = q;
  return finish(std::move(n), true);
}

const Expr& zero_expr() {
  static const Expr z = make_const(Rational(0));
  return z;
}

const Expr& one_expr() {
  static const Expr o = make_const(Rational(1));
  return o;
}

Expr make_unary(Kind k, const Expr& a, bool canonical = true) {
  auto n = new_node(k);
  n->ops.push_back(a);
  return finish(std::move(n), canonical);
}

Expr make_pow_node(const Expr& b, const Expr& e, bool canonical = true) {
  auto n = new_node(Kind::Pow);
  n->ops = {b, e};
  return finish(std::move(n), canonical);
}

Expr make_mul_node(const Rational& c, std::vector<Expr> factors, bool canonical = true) {
  auto n = new_node(Kind::Mul);
  n->num = c;
  n->ops = std::move(factors);
  return finish(std::move(n), canonical);
}

Expr make_add_node(std::vector<Expr> terms, bool canonical = true) {
  auto n = new_node(Kind::Add);
  n->ops = std::move(terms);
  return finish(std::move(n), canonical);
}

inline const Expr& canon_ref(const Expr& e, Expr& storage) {
  if (e.canonical()) return e;
  storage = normalize(e);
  return storage;
}

int sign_of(int c) { return (c > 0) - (c < 0); }

int atom_rank(Kind k) {
  switch (k) {
    case Kind::Sym: return 0;
    case Kind::Func: return 1;
    case Kind::Exp: return 2;
    case Kind::LnAbs: return 3;
    case Kind::Abs: return 4;
    case Kind::Add: return 5;
    default: return 6;
  }
}

int compare_atom(const Expr& a, const Expr& b) {
  int ra = atom_rank(a.kind()), rb = atom_rank(b.kind());
  if (ra != rb) return ra < rb ? -1 : 1;
  switch (a.kind()) {
    case Kind::Sym: {
      auto c = a.symbol() <=> b.symbol();
      return c < 0 ? -1 : (c > 0 ? 1 : 0);
    }
    case Kind::Func: {
      if (a.function() != b.function()) {
        int c = a.function().name().compare(b.function().name());
        return sign_of(c);
      }
      const auto& da = a.deriv();
      const auto& db = b.deriv();
      int oa = 0, ob = 0;
      for (auto d : da) oa += d;
      for (auto d : db) ob += d;
      if (oa != ob) return oa < ob ? -1 : 1;
      for (std::size_t i = 0; i < da.size() && i < db.size(); ++i)
        if (da[i] != db[i]) return da[i] > db[i] ? -1 : 1;
      break;
    }
    default:
      break;
  }
  const auto& xa = a.ops();
  const auto& xb = b.ops();
  for (std::size_t i = 0; i < xa.size() && i < xb.size(); ++i) {
    int c = compare(xa[i], xb[i]);
    if (c != 0) return c;
  }
  if (xa.size() != xb.size()) return xa.size() < xb.size() ? -1 : 1;
  return 0;
}

struct FView {
  const Expr* b;
  const Expr* e;
};

void factor_view(const Expr& x, std::vector<FView>& out) {
  switch (x.kind()) {
    case Kind::Mul:
      for (const auto& op : x.ops()) {
        if (op.kind() == Kind::Pow)
          out.push_back({&op.ops()[0], &op.ops()[1]});
        else
          out.push_back({&op, &one_expr()});
      }
      break;
    case Kind::Pow:
      out.push_back({&x.ops()[0], &x.ops()[1]});
      break;
    default:
      out.push_back({&x, &one_expr()});
  }
}

Rational content_of_sum(const Expr& s) {
  Integer g = 0, l = 1;
  bool first = true;
  int sign = 1;
  for (const auto& t : s.ops()) {
    const Rational& c = t.kind() == Kind::Const || t.kind() == Kind::Mul ? t.value() : Rational(1);
    if (first) {
      sign = sgn(c) < 0 ? -1 : 1;
      first = false;
    }
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  }
  Rational r(g, l);
  r.canonicalize();
  if (sign < 0) r = -r;
  return r;
}

Expr make_term(const Rational& c, const Expr& mono) {
  if (c == 1) return mono;
  if (mono.kind() == Kind::Const) return make_const(c * mono.value());
  if (mono.kind() == Kind::Mul) return make_mul_node(c * mono.value(), mono.ops());
  return make_mul_node(c, {mono});
}

Expr scale_sum(const Expr& s, const Rational& r) {
  std::vector<Expr> terms;
  terms.reserve(s.ops().size());
  for (const auto& t : s.ops()) {
    auto [c, m] = split_coefficient(t);
    terms.push_back(make_term(c * r, m));
  }
  return make_add_node(std::move(terms));
}

struct PF {
  Expr b;
  Expr e;
};

void absorb_factor(const Expr& f, Rational& coeff, std::vector<PF>& fs) {
  switch (f.kind()) {
    case Kind::Const:
      coeff *= f.value();
      break;
    case Kind::Mul:
      coeff *= f.value();
      for (const auto& op : f.ops()) absorb_factor(op, coeff, fs);
      break;
    case Kind::Pow:
      fs.push_back({f.ops()[0], f.ops()[1]});
      break;
    default:
      fs.push_back({f, one_expr()});
  }
}

bool positive_integer(const Expr& e, Rational& r) { return e.as_rational(r) && is_integer(r) && r > 0; }

// Rewrites one (base, exponent) pair; returns true when something changed.
bool rewrite_factor(const PF& pf, Rational& coeff, std::vector<PF>& out, const std::vector<PF>& all) {
  Rational er;
  bool rat = pf.e.as_rational(er);
  if (rat && er == 0) return true;
  const Expr& b = pf.b;
  switch (b.kind()) {
    case Kind::Const: {
      const Rational& c = b.value();
      if (c == 1) return true;
      if (c == 0) {
        if (rat && er > 0) {
          coeff = 0;
          return true;
        }
        throw DivisionByZero("zero raised to a non-positive power");
      }
      Rational r;
      if (rat && exact_rational_power(c, er, r)) {
        coeff *= r;
        return true;
      }
      if (rat && c < 0 && !is_integer(er)) {
        // (-c)^e for odd-denominator roots; keep as a negative base otherwise
        if (mpz_odd_p(er.get_den_mpz_t()) != 0) {
          if (mpz_odd_p(er.get_num_mpz_t()) != 0) coeff = -coeff;
          out.push_back({make_const(-c), pf.e});
          return true;
        }
      }
      out.push_back(pf);
      return false;
    }
    case Kind::Mul: {
      if (rat && is_integer(er)) {
        coeff *= ipow(b.value(), er.get_num().get_si());
        for (const auto& op : b.ops()) {
          if (op.kind() == Kind::Pow)
            out.push_back({op.ops()[0], op.ops()[1] * pf.e});
          else
            out.push_back({op, pf.e});
        }
        return true;
      }
      out.push_back(pf);
      return false;
    }
    case Kind::Pow: {
      Rational e0;
      bool rat0 = b.ops()[1].as_rational(e0);
      if (rat && is_integer(er)) {
        out.push_back({b.ops()[0], b.ops()[1] * pf.e});
        return true;
      }
      if (rat0 && is_even_integer(e0)) {
        out.push_back({abs(b.ops()[0]), b.ops()[1] * pf.e});
        return true;
      }
      // (a^e0)^e = a^(e0*e) for a > 0
      const Expr& a = b.ops()[0];
      if (a.kind() == Kind::Abs || (a.kind() == Kind::Sym && a.symbol().positive())) {
        out.push_back({a, b.ops()[1] * pf.e});
        return true;
      }
      out.push_back(pf);
      return false;
    }
    case Kind::Sym: {
      Constraint c = b.symbol().constraint();
      if (c == Constraint::SignUnit && rat && is_integer(er)) {
        if (is_even_integer(er)) return true;
        if (er != 1) {
          out.push_back({b, one_expr()});
          return true;
        }
      }
      if (c == Constraint::Idempotent && rat && is_integer(er) && er > 1) {
        out.push_back({b, one_expr()});
        return true;
      }
      out.push_back(pf);
      return false;
    }
    case Kind::Abs: {
      if (rat && is_even_integer(er)) {
        out.push_back({b.arg(), pf.e});
        return true;
      }
      out.push_back(pf);
      return false;
    }
    case Kind::Add: {
      Rational c = content_of_sum(b);
      if (c == 1) {
        out.push_back(pf);
        return false;
      }
      bool pos_int = rat && is_integer(er) && er > 0;
      Expr prim = scale_sum(b, 1 / c);
      if (pos_int) {
        // only normalize when it lets the factor cancel against a denominator
        bool matches = false;
        for (const auto& q : all)
          if (&q != &pf && q.b.kind() == Kind::Add && q.b == prim) matches = true;
        if (!matches) {
          out.push_back(pf);
          return false;
        }
      }
      if (rat && is_integer(er)) {
        coeff *= ipow(c, er.get_num().get_si());
        out.push_back({prim, pf.e});
        return true;
      }
      if (c > 0) {
        out.push_back({make_const(c), pf.e});
        out.push_back({prim, pf.e});
        return true;
      }
      out.push_back(pf);
      return false;
    }
    default:
      out.push_back(pf);
      return false;
  }
}

Expr build_product(const Rational& coeff, std::vector<PF>& plain) {
  if (coeff == 0) return zero_expr();
  std::sort(plain.begin(), plain.end(), [](const PF& x, const PF& y) { return compare(x.b, y.b) < 0; });
  std::vector<Expr> factors;
  factors.reserve(plain.size());
  for (const auto& pf : plain) factors.push_back(pf.e.is_one() ? pf.b : make_pow_node(pf.b, pf.e));
  if (factors.empty()) return make_const(coeff);
  if (coeff == 1 && factors.size() == 1) return factors[0];
  return make_mul_node(coeff, std::move(factors));
}

Expr product_pf(Rational coeff, std::vector<PF> fs) {
  for (int guard = 0;; ++guard) {
    if (guard > 200) throw std::logic_error("product normalization did not converge");
    if (coeff == 0) return zero_expr();
    std::sort(fs.begin(), fs.end(), [](const PF& x, const PF& y) { return compare(x.b, y.b) < 0; });
    std::vector<PF> merged;
    merged.reserve(fs.size());
    for (auto& pf : fs) {
      if (!merged.empty() && merged.back().b == pf.b)
        merged.back().e = merged.back().e + pf.e;
      else
        merged.push_back(std::move(pf));
    }

    int nexp = 0;
    bool need = false;
    for (const auto& pf : merged)
      if (pf.b.kind() == Kind::Exp) {
        ++nexp;
        if (!pf.e.is_one()) need = true;
      }
    if (nexp > 1 || need) {
      std::vector<Expr> args;
      std::vector<PF> rest;
      for (auto& pf : merged) {
        if (pf.b.kind() == Kind::Exp)
          args.push_back(pf.e * pf.b.arg());
        else
          rest.push_back(std::move(pf));
      }
      Expr ex = exp(sum(args));
      fs = std::move(rest);
      absorb_factor(ex, coeff, fs);
      continue;
    }

    bool changed = false;
    for (auto& pf : merged) {
      if (pf.b.kind() != Kind::Abs) continue;
      for (auto& q : merged) {
        Rational eb;
        if (q.b.kind() == Kind::Abs || !(q.b == pf.b.arg()) || !q.e.as_rational(eb) || !is_integer(eb)) continue;
        Integer k;
        mpz_fdiv_q_ui(k.get_mpz_t(), eb.get_num_mpz_t(), 2);
        if (k != 0) {
          Rational k2(k * 2);
          pf.e = pf.e + Expr(k2);
          q.e = Expr(Rational(eb - k2));
          changed = true;
        }
      }
    }

    std::vector<PF> next;
    next.reserve(merged.size());
    for (const auto& pf : merged) changed = rewrite_factor(pf, coeff, next, merged) || changed;
    fs = std::move(next);
    if (!changed) break;
  }

  std::vector<PF> plain;
  std::vector<std::pair<Expr, long>> sums;
  for (auto& pf : fs) {
    Rational er;
    if (pf.b.kind() == Kind::Add && positive_integer(pf.e, er) && er.get_num().fits_slong_p())
      sums.emplace_back(pf.b, er.get_num().get_si());
    else
      plain.push_back(std::move(pf));
  }
  Expr rest = build_product(coeff, plain);
  if (sums.empty()) return rest;
  Expr acc = rest;
  for (const auto& [s, k] : sums) {
    for (long rep = 0; rep < k; ++rep) {
      std::vector<Expr> nt;
      for (const auto& t : terms_of(acc))
        for (const auto& op : s.ops()) nt.push_back(product({t, op}));
      acc = sum(nt);
    }
  }
  return acc;
}

}  // namespace

Expr::Expr() : n_(zero_expr().n_) {}
Expr::Expr(int v) : Expr(Rational(v)) {}
Expr::Expr(long v) : Expr(Rational(v)) {}
Expr::Expr(const Rational& q) {
  if (q == 0)
    n_ = zero_expr().n_;
  else if (q == 1)
    n_ = one_expr().n_;
  else
    n_ = make_const(q).n_;
}
Expr::Expr(Symbol s) {
  if (!s.valid()) throw std::invalid_argument("invalid symbol");
  auto n = new_node(Kind::Sym);
  n->sym = s;
  n_ = finish(std::move(n), true).n_;
}

Expr Expr::func(Function f, std::vector<Expr> args, std::vector<std::uint8_t> deriv) {
  if (!f.valid()) throw std::invalid_argument("invalid function");
  if (args.size() != f.arity())
    throw std::invalid_argument("arity mismatch for " + f.name() + ": expected " + std::to_string(f.arity()) +
                                ", got " + std::to_string(args.size()));
  if (deriv.empty()) deriv.assign(f.arity(), 0);
  if (deriv.size() != f.arity()) throw std::invalid_argument("derivative index size mismatch");
  for (auto& a : args)
    if (!a.canonical()) a = normalize(a);

  if (auto inv = f.inverse(); inv && args[0].kind() == Kind::Func && args[0].function() == *inv &&
                              args[0].deriv()[0] == 0) {
    const Expr& y = args[0].ops()[0];
    if (deriv[0] == 0) return y;
    Symbol z = Symbol::auxiliary("zinv");
    Expr inner = Expr::func(*inv, {Expr(z)});
    Expr h = Expr::func(f, {inner}, {static_cast<std::uint8_t>(deriv[0] - 1)});
    Expr r = diff(h, z) / Expr::func(*inv, {Expr(z)}, {1});
    return substitute(r, {{Expr(z), y}});
  }

  auto n = new_node(Kind::Func);
  n->fn = f;
  n->deriv = std::move(deriv);
  n->ops = std::move(args);
  return finish(std::move(n), true);
}

Expr Expr::func(Function f) {
  std::vector<Expr> args;
  for (Symbol s : f.info().slots) args.emplace_back(s);
  return func(f, std::move(args));
}

Expr Expr::raw_add(std::vector<Expr> terms) { return make_add_node(std::move(terms), false); }
Expr Expr::raw_mul(std::vector<Expr> factors) { return make_mul_node(Rational(1), std::move(factors), false); }
Expr Expr::raw_pow(Expr base, Expr exponent) { return make_pow_node(base, exponent, false); }

Kind Expr::kind() const { return n_->kind; }
bool Expr::canonical() const { return n_->canonical; }
const Rational& Expr::value() const { return n_->num; }
Symbol Expr::symbol() const { return n_->sym; }
Function Expr::function() const { return n_->fn; }
const std::vector<std::uint8_t>& Expr::deriv() const { return n_->deriv; }
const std::vector<Expr>& Expr::ops() const { return n_->ops; }
const Expr& Expr::base() const { return n_->ops.at(0); }
const Expr& Expr::exponent() const { return n_->ops.at(1); }
const Expr& Expr::arg() const { return n_->ops.at(0); }
std::size_t Expr::hash() const { return n_->hash; }

bool Expr::is_zero() const { return n_->kind == Kind::Const && n_->num == 0; }
bool Expr::is_one() const { return n_->kind == Kind::Const && n_->num == 1; }
bool Expr::is_sym(Symbol s) const { return n_->kind == Kind::Sym && n_->sym == s; }

bool Expr::as_rational(Rational& out) const {
  if (n_->kind != Kind::Const) return false;
  out = n_->num;
  return true;
}

bool Expr::has(Symbol s) const {
  return std::binary_search(n_->free_syms.begin(), n_->free_syms.end(), s.ptr());
}

bool Expr::has(Function f) const {
  return std::binary_search(n_->free_funcs.begin(), n_->free_funcs.end(), f.ptr());
}

bool Expr::has_any(const std::vector<Symbol>& syms) const {
  for (Symbol s : syms)
    if (has(s)) return true;
  return false;
}

const std::vector<const SymbolInfo*>& Expr::free_symbols() const { return n_->free_syms; }
const std::vector<const FunctionInfo*>& Expr::free_functions() const { return n_->free_funcs; }

bool operator==(const Expr& a, const Expr& b) {
  if (a.n_ == b.n_) return true;
  if (a.n_->hash != b.n_->hash) return false;
  return compare(a, b) == 0;
}

int compare(const Expr& a, const Expr& b) {
  if (a.node() == b.node()) return 0;
  bool ac = a.is_const(), bc = b.is_const();
  if (ac || bc) {
    if (ac && bc) return sign_of(cmp(a.value(), b.value()));
    return ac ? -1 : 1;
  }
  bool am = a.kind() == Kind::Mul || a.kind() == Kind::Pow;
  bool bm = b.kind() == Kind::Mul || b.kind() == Kind::Pow;
  if (!am && !bm) return compare_atom(a, b);
  std::vector<FView> va, vb;
  factor_view(a, va);
  factor_view(b, vb);
  for (std::size_t i = 0; i < va.size() && i < vb.size(); ++i) {
    int c = compare(*va[i].b, *vb[i].b);
    if (c != 0) return c;
    c = compare(*va[i].e, *vb[i].e);
    if (c != 0) return c;
  }
  if (va.size() != vb.size()) return va.size() < vb.size() ? -1 : 1;
  Rational ca = a.kind() == Kind::Mul ? a.value() : Rational(1);
  Rational cb = b.kind() == Kind::Mul ? b.value() : Rational(1);
  return sign_of(cmp(ca, cb));
}

std::pair<Rational, Expr> split_coefficient(const Expr& t) {
  switch (t.kind()) {
    case Kind::Const:
      return {t.value(), one_expr()};
    case Kind::Mul:
      if (t.ops().size() == 1) return {t.value(), t.ops()[0]};
      if (t.value() == 1) return {Rational(1), t};
      return {t.value(), make_mul_node(Rational(1), t.ops())};
    default:
      return {Rational(1), t};
  }
}

std::vector<Expr> terms_of(const Expr& e) {
  if (e.kind() == Kind::Add) return e.ops();
  if (e.is_zero()) return {};
  return {e};
}

std::vector<std::pair<Expr, Expr>> factors_of(const Expr& m) {
  std::vector<std::pair<Expr, Expr>> out;
  std::vector<FView> v;
  if (m.kind() == Kind::Const) return out;
  factor_view(m, v);
  for (const auto& f : v) out.emplace_back(*f.b, *f.e);
  return out;
}

Expr sum(const std::vector<Expr>& in) {
  Rational constant(0);
  std::vector<std::pair<Expr, Rational>> acc;
  std::function<void(const Expr&)> absorb = [&](const Expr& t) {
    switch (t.kind()) {
      case Kind::Const:
        constant += t.value();
        break;
      case Kind::Add:
        for (const auto& op : t.ops()) absorb(op);
        break;
      default: {
        auto [c, m] = split_coefficient(t);
        acc.emplace_back(std::move(m), std::move(c));
      }
    }
  };
  for (const auto& t : in) {
    Expr tmp;
    absorb(canon_ref(t, tmp));
  }
  std::sort(acc.begin(), acc.end(), [](const auto& x, const auto& y) { return compare(x.first, y.first) < 0; });
  std::vector<Expr> terms;
  if (constant != 0) terms.push_back(make_const(constant));
  for (std::size_t i = 0; i < acc.size();) {
    Rational c = acc[i].second;
    std::size_t j = i + 1;
    while (j < acc.size() && acc[j].first == acc[i].first) c += acc[j++].second;
    if (c != 0) terms.push_back(make_term(c, acc[i].first));
    i = j;
  }
  if (terms.empty()) return zero_expr();
  if (terms.size() == 1) return terms[0];
  return make_add_node(std::move(terms));
}

Expr product(const std::vector<Expr>& in) {
  Rational coeff(1);
  std::vector<PF> fs;
  for (const auto& f : in) {
    Expr tmp;
    absorb_factor(canon_ref(f, tmp), coeff, fs);
    if (coeff == 0) return zero_expr();
  }
  if (fs.empty()) return Expr(coeff);
  if (coeff == 1 && fs.size() == 1 && fs[0].e.is_one()) return fs[0].b;
  return product_pf(coeff, std::move(fs));
}

Expr pow(const Expr& b0, const Expr& e0) {
  Expr tb, te;
  const Expr& b = canon_ref(b0, tb);
  const Expr& e = canon_ref(e0, te);
  if (e.is_zero()) return one_expr();
  if (e.is_one()) return b;
  if (b.is_zero()) {
    Rational r;
    if (e.as_rational(r) && r > 0) return zero_expr();
    throw DivisionByZero("zero raised to a non-positive power");
  }
  return product_pf(Rational(1), {PF{b, e}});
}

Expr exp(const Expr& a0) {
  Expr ta;
  const Expr& a = canon_ref(a0, ta);
  if (a.is_zero()) return one_expr();
  std::vector<Expr> keep, extra;
  for (const auto& t : terms_of(a)) {
    auto [c, mono] = split_coefficient(t);
    auto fl = factors_of(mono);
    int idx = -1;
    bool ok = true;
    for (std::size_t i = 0; i < fl.size(); ++i) {
      Rational r;
      if (fl[i].first.kind() == Kind::LnAbs && fl[i].second.is_one() && idx < 0) {
        idx = static_cast<int>(i);
      } else if (fl[i].first.kind() == Kind::Sym && fl[i].first.symbol().kind() == SymbolKind::Parameter &&
                 positive_integer(fl[i].second, r)) {
      } else {
        ok = false;
      }
    }
    if (idx >= 0 && ok) {
      std::vector<Expr> k{Expr(c)};
      for (std::size_t i = 0; i < fl.size(); ++i)
        if (static_cast<int>(i) != idx) k.push_back(pow(fl[i].first, fl[i].second));
      const Expr& y = fl[static_cast<std::size_t>(idx)].first.arg();
      extra.push_back(pow(abs(y), product(k)));
    } else {
      keep.push_back(t);
    }
  }
  Expr rest = sum(keep);
  Expr node = rest.is_zero() ? one_expr() : make_unary(Kind::Exp, rest);
  if (extra.empty()) return node;
  extra.push_back(node);
  return product(extra);
}

Expr lnabs(const Expr& a0) {
  Expr ta;
  const Expr& a = canon_ref(a0, ta);
  switch (a.kind()) {
    case Kind::Const: {
      Rational c = ::abs(a.value());
      if (c == 0) throw DivisionByZero("logarithm of zero");
      if (c == 1) return zero_expr();
      return make_unary(Kind::LnAbs, make_const(c));
    }
    case Kind::Sym:
      if (a.symbol().constraint() == Constraint::SignUnit) return zero_expr();
      return make_unary(Kind::LnAbs, a);
    case Kind::Mul: {
      std::vector<Expr> parts{lnabs(Expr(a.value()))};
      for (const auto& op : a.ops()) parts.push_back(lnabs(op));
      return sum(parts);
    }
    case Kind::Pow:
      return a.exponent() * lnabs(a.base());
    case Kind::Exp:
      return a.arg();
    case Kind::Abs:
      return lnabs(a.arg());
    case Kind::Add: {
      Rational c = content_of_sum(a);
      if (c == 1) return make_unary(Kind::LnAbs, a);
      Expr prim = scale_sum(a, 1 / c);
      return lnabs(Expr(c)) + make_unary(Kind::LnAbs, prim);
    }
    default:
      return make_unary(Kind::LnAbs, a);
  }
}

Expr abs(const Expr& a0) {
  Expr ta;
  const Expr& a = canon_ref(a0, ta);
  switch (a.kind()) {
    case Kind::Const:
      return Expr(Rational(::abs(a.value())));
    case Kind::Sym: {
      Symbol s = a.symbol();
      if (s.positive()) return a;
      if (s.constraint() == Constraint::SignUnit) return one_expr();
      if (s.constraint() == Constraint::Idempotent) return a;
      return make_unary(Kind::Abs, a);
    }
    case Kind::Mul: {
      std::vector<Expr> parts{Expr(Rational(::abs(a.value())))};
      for (const auto& op : a.ops()) parts.push_back(abs(op));
      return product(parts);
    }
    case Kind::Pow: {
      Rational r;
      if (a.exponent().as_rational(r) && is_even_integer(r)) return a;
      return pow(abs(a.base()), a.exponent());
    }
    case Kind::Exp:
    case Kind::Abs:
      return a;
    case Kind::Add: {
      Rational c = content_of_sum(a);
      if (c == 1) return make_unary(Kind::Abs, a);
      return Expr(Rational(::abs(c))) * make_unary(Kind::Abs, scale_sum(a, 1 / c));
    }
    default:
      return make_unary(Kind::Abs, a);
  }
}

Expr normalize(const Expr& e) {
  if (e.canonical()) return e;
  switch (e.kind()) {
    case Kind::Add: {
      std::vector<Expr> ts;
      for (const auto& op : e.ops()) ts.push_back(normalize(op));
      return sum(ts);
    }
    case Kind::Mul: {
      std::vector<Expr> fs{Expr(e.value())};
      for (const auto& op : e.ops()) fs.push_back(normalize(op));
      return product(fs);
    }
    case Kind::Pow:
      return pow(normalize(e.base()), normalize(e.exponent()));
    case Kind::Exp:
      return exp(normalize(e.arg()));
    case Kind::LnAbs:
      return lnabs(normalize(e.arg()));
    case Kind::Abs:
      return abs(normalize(e.arg()));
    case Kind::Func: {
      std::vector<Expr> args;
      for (const auto& op : e.ops()) args.push_back(normalize(op));
      return Expr::func(e.function(), args, e.deriv());
    }
    default:
      return e;
  }
}

Expr operator+(const Expr& a, const Expr& b) {
  if (a.is_zero() && b.canonical()) return b;
  if (b.is_zero() && a.canonical()) return a;
  return sum({a, b});
}
Expr operator-(const Expr& a) { return product({Expr(-1), a}); }
Expr operator-(const Expr& a, const Expr& b) { return sum({a, product({Expr(-1), b})}); }
Expr operator*(const Expr& a, const Expr& b) {
  if (a.is_one() && b.canonical()) return b;
  if (b.is_one() && a.canonical()) return a;
  return product({a, b});
}
Expr operator/(const Expr& a, const Expr& b) {
  if (b.is_zero()) throw DivisionByZero("division by zero");
  return product({a, pow(b, Expr(-1))});
}
Expr& operator+=(Expr& a, const Expr& b) { return a = a + b; }
Expr& operator-=(Expr& a, const Expr& b) { return a = a - b; }
Expr& operator*=(Expr& a, const Expr& b) { return a = a * b; }

Expr numerator(const Expr& e0) {
  Expr e = normalize(e0);
  for (int guard = 0; guard < 16; ++guard) {
    std::vector<std::pair<Expr, long>> dens;
    for (const auto& t : terms_of(e)) {
      auto [c, m] = split_coefficient(t);
      for (const auto& [b, x] : factors_of(m)) {
        Rational r;
        if (b.kind() != Kind::Add || !x.as_rational(r) || !is_integer(r) || r >= 0) continue;
        long k = -r.get_num().get_si();
        auto it = std::find_if(dens.begin(), dens.end(), [&](const auto& d) { return d.first == b; });
        if (it == dens.end())
          dens.emplace_back(b, k);
        else
          it->second = std::max(it->second, k);
      }
    }
    if (dens.empty()) return e;
    std::vector<Expr> scaled;
    for (const auto& t : terms_of(e)) {
      std::vector<Expr> fs{t};
      for (const auto& [b, k] : dens) fs.push_back(make_pow_node(b, Expr(k)));
      scaled.push_back(product(fs));
    }
    e = sum(scaled);
  }
  return e;
}

}  // namespace wavegc
