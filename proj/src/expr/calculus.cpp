#include "wavegc/expr/calculus.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <unordered_map>

namespace wavegc {

Symbol time_var() {
  static const Symbol t = Symbol::independent("t");
  return t;
}

Symbol space_var() {
  static const Symbol x = Symbol::independent("x");
  return x;
}

Expr diff(const Expr& e0, Symbol s) {
  Expr e = normalize(e0);
  if (!e.has(s)) return Expr();
  switch (e.kind()) {
    case Kind::Sym:
      return Expr(1);
    case Kind::Add: {
      std::vector<Expr> ts;
      for (const auto& op : e.ops()) ts.push_back(diff(op, s));
      return sum(ts);
    }
    case Kind::Mul: {
      std::vector<Expr> ts;
      const auto& ops = e.ops();
      for (std::size_t i = 0; i < ops.size(); ++i) {
        if (!ops[i].has(s)) continue;
        std::vector<Expr> fs{Expr(e.value())};
        for (std::size_t j = 0; j < ops.size(); ++j)
          if (j != i) fs.push_back(ops[j]);
        fs.push_back(diff(ops[i], s));
        ts.push_back(product(fs));
      }
      return sum(ts);
    }
    case Kind::Pow: {
      const Expr& b = e.base();
      const Expr& x = e.exponent();
      Expr r;
      if (b.has(s)) r += x * pow(b, x - Expr(1)) * diff(b, s);
      if (x.has(s)) r += e * lnabs(b) * diff(x, s);
      return r;
    }
    case Kind::Exp:
      return e * diff(e.arg(), s);
    case Kind::LnAbs:
      return diff(e.arg(), s) / e.arg();
    case Kind::Abs:
      return e * diff(e.arg(), s) / e.arg();
    case Kind::Func: {
      std::vector<Expr> ts;
      const auto& args = e.ops();
      for (std::size_t i = 0; i < args.size(); ++i) {
        if (!args[i].has(s)) continue;
        auto d = e.deriv();
        d[i] = static_cast<std::uint8_t>(d[i] + 1);
        ts.push_back(Expr::func(e.function(), args, d) * diff(args[i], s));
      }
      return sum(ts);
    }
    default:
      return Expr();
  }
}

Expr diff(const Expr& e, Symbol s, int times) {
  Expr r = e;
  for (int i = 0; i < times; ++i) r = diff(r, s);
  return r;
}

Expr total_derivative(const Expr& e0, Direction d, int max_order) {
  Expr e = normalize(e0);
  Symbol var = d == Direction::T ? time_var() : space_var();
  std::vector<Expr> ts{diff(e, var)};
  for (const SymbolInfo* si : e.free_symbols()) {
    Symbol s(si);
    if (!s.is_jet()) continue;
    Symbol up = d == Direction::T ? s.jet_shift(1, 0) : s.jet_shift(0, 1);
    if (up.order() > max_order)
      throw JetOrderOverflow("total derivative of " + s.name() + " exceeds jet order " + std::to_string(max_order));
    ts.push_back(diff(e, s) * Expr(up));
  }
  return sum(ts);
}

namespace {

Expr rebuild(const Expr& e, std::vector<Expr> ops) {
  switch (e.kind()) {
    case Kind::Add:
      return sum(ops);
    case Kind::Mul:
      ops.push_back(Expr(e.value()));
      return product(ops);
    case Kind::Pow:
      return pow(ops[0], ops[1]);
    case Kind::Exp:
      return exp(ops[0]);
    case Kind::LnAbs:
      return lnabs(ops[0]);
    case Kind::Abs:
      return abs(ops[0]);
    case Kind::Func:
      return Expr::func(e.function(), std::move(ops), e.deriv());
    default:
      return e;
  }
}

struct Replacer {
  std::unordered_map<Expr, Expr> table;
  std::vector<const SymbolInfo*> syms;    // sorted
  std::vector<const FunctionInfo*> funcs;  // sorted
  std::unordered_map<const Node*, Expr> memo;

  bool touches(const Expr& e) const {
    for (auto* s : e.free_symbols())
      if (std::binary_search(syms.begin(), syms.end(), s)) return true;
    for (auto* f : e.free_functions())
      if (std::binary_search(funcs.begin(), funcs.end(), f)) return true;
    return false;
  }

  Expr run(const Expr& e) {
    if (!touches(e)) return e;
    if (auto it = table.find(e); it != table.end()) return it->second;
    if (auto it = memo.find(e.node()); it != memo.end()) return it->second;
    std::vector<Expr> ops;
    ops.reserve(e.ops().size());
    for (const auto& op : e.ops()) ops.push_back(run(op));
    Expr r = rebuild(e, std::move(ops));
    memo.emplace(e.node(), r);
    return r;
  }
};

bool derivable(Symbol from, Symbol to) {
  if (!from.is_jet() || !to.is_jet()) return false;
  if (from.dependent_var() != to.dependent_var()) return false;
  return to.info().nt >= from.info().nt && to.info().nx >= from.info().nx && from != to;
}

Expr substitute_impl(const Expr& e0, const Bindings& bindings, int max_order, bool closure);

}  // namespace

Expr substitute(const Expr& e0, const Bindings& bindings, int max_order) {
  return substitute_impl(e0, bindings, max_order, true);
}

Expr substitute_plain(const Expr& e0, const Bindings& bindings) {
  return substitute_impl(e0, bindings, kDefaultJetOrder, false);
}

namespace {

Expr substitute_impl(const Expr& e0, const Bindings& bindings, int max_order, bool closure) {
  Expr e = normalize(e0);
  if (bindings.empty()) return e;
  Replacer rep;
  std::vector<std::pair<Symbol, Expr>> jet_keys;
  for (const auto& [k0, v0] : bindings) {
    Expr k = normalize(k0);
    Expr v = normalize(v0);
    if (k.kind() == Kind::Sym) {
      rep.syms.push_back(k.symbol().ptr());
      if (k.symbol().is_jet()) jet_keys.emplace_back(k.symbol(), v);
    } else if (k.kind() == Kind::Func) {
      rep.funcs.push_back(k.function().ptr());
    } else {
      throw std::invalid_argument("substitution key must be a symbol or function application: " + k.str());
    }
    if (!rep.table.emplace(k, v).second) throw InconsistentBinding("duplicate binding for " + k.str());
  }

  if (closure && !jet_keys.empty()) {
    auto derive = [&](const std::pair<Symbol, Expr>& src, Symbol s) {
      Expr v = src.second;
      for (int i = src.first.info().nt; i < s.info().nt; ++i) v = total_derivative(v, Direction::T, max_order);
      for (int i = src.first.info().nx; i < s.info().nx; ++i) v = total_derivative(v, Direction::X, max_order);
      return v;
    };
    // Explicit bindings must agree with derivation from lower bound jets.
    for (const auto& lo : jet_keys)
      for (const auto& hi : jet_keys)
        if (derivable(lo.first, hi.first) && !numerator(derive(lo, hi.first) - hi.second).is_zero())
          throw InconsistentBinding("binding for " + hi.first.name() + " contradicts the derivative of the binding for " +
                                    lo.first.name());
    std::vector<Symbol> occurring;
    for (auto* si : e.free_symbols())
      if (Symbol(si).is_jet()) occurring.push_back(Symbol(si));
    for (Symbol s : occurring) {
      if (rep.table.count(Expr(s))) continue;
      std::optional<Expr> value;
      const std::pair<Symbol, Expr>* from = nullptr;
      for (const auto& jk : jet_keys) {
        if (!derivable(jk.first, s)) continue;
        Expr v = derive(jk, s);
        if (value && !numerator(*value - v).is_zero())
          throw InconsistentBinding("jet " + s.name() + " derives differently from " + from->first.name() + " and " +
                                    jk.first.name());
        if (!value) {
          value = v;
          from = &jk;
        }
      }
      if (!value) continue;
      rep.table.emplace(Expr(s), *value);
      rep.syms.push_back(s.ptr());
    }
  }

  std::sort(rep.syms.begin(), rep.syms.end());
  std::sort(rep.funcs.begin(), rep.funcs.end());
  return rep.run(e);
}

}  // namespace

Expr substitute_function(const Expr& e0, Function fn, const Expr& body) {
  Expr e = normalize(e0);
  std::unordered_map<const Node*, Expr> memo;
  std::map<std::vector<std::uint8_t>, Expr> partials;
  const auto& slots = fn.info().slots;
  std::function<Expr(const Expr&)> run = [&](const Expr& x) -> Expr {
    if (!x.has(fn)) return x;
    if (auto it = memo.find(x.node()); it != memo.end()) return it->second;
    std::vector<Expr> ops;
    for (const auto& op : x.ops()) ops.push_back(run(op));
    Expr r;
    if (x.kind() == Kind::Func && x.function() == fn) {
      auto pit = partials.find(x.deriv());
      if (pit == partials.end()) {
        Expr d = body;
        for (std::size_t i = 0; i < slots.size(); ++i) d = diff(d, slots[i], x.deriv()[i]);
        pit = partials.emplace(x.deriv(), d).first;
      }
      Bindings b;
      for (std::size_t i = 0; i < slots.size(); ++i) b.emplace_back(Expr(slots[i]), ops[i]);
      r = substitute(pit->second, b);
    } else {
      r = rebuild(x, std::move(ops));
    }
    memo.emplace(x.node(), r);
    return r;
  };
  return run(e);
}

Expr Collected::monomial(const std::vector<int>& exps) const {
  std::vector<Expr> fs;
  for (std::size_t i = 0; i < vars.size(); ++i) fs.push_back(pow(Expr(vars[i]), Expr(exps[i])));
  return product(fs);
}

Expr Collected::coefficient(const std::vector<int>& exps) const {
  auto it = parts.find(exps);
  return it == parts.end() ? Expr() : it->second;
}

Collected collect(const Expr& e0, const std::vector<Symbol>& vars) {
  Expr e = normalize(e0);
  Collected out;
  out.vars = vars;
  std::map<std::vector<int>, std::vector<Expr>> acc;
  for (const auto& t : terms_of(e)) {
    auto [c, mono] = split_coefficient(t);
    std::vector<int> exps(vars.size(), 0);
    std::vector<Expr> rest{Expr(c)};
    for (const auto& [b, x] : factors_of(mono)) {
      auto it = b.kind() == Kind::Sym ? std::find(vars.begin(), vars.end(), b.symbol()) : vars.end();
      if (it != vars.end()) {
        Rational r;
        if (!x.as_rational(r) || !is_integer(r) || r < 0 || !r.get_num().fits_sint_p())
          throw NotPolynomial("non-polynomial power of " + b.str());
        exps[static_cast<std::size_t>(it - vars.begin())] = static_cast<int>(r.get_num().get_si());
        continue;
      }
      for (Symbol v : vars)
        if (b.has(v) || x.has(v)) throw NotPolynomial("expression is not polynomial in " + v.name() + ": " + b.str());
      rest.push_back(pow(b, x));
    }
    acc[exps].push_back(product(rest));
  }
  for (auto& [k, v] : acc) {
    Expr s = sum(v);
    if (!s.is_zero()) out.parts.emplace(k, s);
  }
  return out;
}

std::vector<std::pair<Expr, Rational>> rational_split(const Expr& e0) {
  Expr e = normalize(e0);
  std::vector<std::pair<Expr, Rational>> out;
  for (const auto& t : terms_of(e)) {
    auto [c, m] = split_coefficient(t);
    out.emplace_back(m, c);
  }
  return out;
}

}  // namespace wavegc
