#include "wavegc/expr/evaluate.hpp"

#include <unordered_map>

namespace wavegc {

namespace mp = boost::multiprecision;

namespace {

Real to_real(const Rational& q) {
  Real r;
  mpfr_set_q(r.backend().data(), q.get_mpq_t(), MPFR_RNDN);
  return r;
}

const Real& snap_threshold() {
  static const Real t = mp::pow(Real(10), -150);
  return t;
}

Value add(const Value& a, const Value& b) {
  if (a.exact && b.exact) return Value::of(Rational(a.q + b.q));
  return Value::of(Real(a.real() + b.real()));
}

Value mul(const Value& a, const Value& b) {
  if (a.exact && b.exact) return Value::of(Rational(a.q * b.q));
  if ((a.exact && a.q == 0) || (b.exact && b.q == 0)) return Value::of(Rational(0));
  return Value::of(Real(a.real() * b.real()));
}

Value power(const Value& b, const Value& e) {
  if (e.exact && e.q == 0) return Value::of(Rational(1));
  if (b.is_zero()) {
    if (e.exact ? e.q > 0 : e.r > 0) return Value::of(Rational(0));
    throw SingularPoint("zero base with non-positive exponent");
  }
  if (b.exact && e.exact) {
    Rational out;
    if (exact_rational_power(b.q, e.q, out)) return Value::of(out);
  }
  if (e.exact && is_integer(e.q) && e.q.get_num().fits_slong_p()) {
    long n = e.q.get_num().get_si();
    return Value::of(Real(mp::pow(b.real(), n)));
  }
  Real br = b.real();
  if (br > 0) return Value::of(Real(mp::pow(br, e.real())));
  // negative base: only odd-denominator rational exponents are real
  if (e.exact && mpz_odd_p(e.q.get_den_mpz_t()) != 0) {
    Real m = mp::pow(Real(-br), to_real(e.q));
    return Value::of(mpz_odd_p(e.q.get_num_mpz_t()) != 0 ? Real(-m) : m);
  }
  throw SingularPoint("negative base with non-rational exponent");
}

Rational falling(int m, int d) {
  Rational r(1);
  for (int i = 0; i < d; ++i) r *= (m - i);
  return r;
}

struct Evaluator {
  const Environment& env;
  std::unordered_map<const Node*, Value> memo;

  Value run(const Expr& e) {
    if (e.kind() == Kind::Const) return Value::of(e.value());
    if (auto it = memo.find(e.node()); it != memo.end()) return it->second;
    Value v = compute(e);
    memo.emplace(e.node(), v);
    return v;
  }

  Value compute(const Expr& e) {
    switch (e.kind()) {
      case Kind::Sym: {
        auto it = env.symbols.find(e.symbol().ptr());
        if (it == env.symbols.end()) throw std::logic_error("no value for symbol " + e.symbol().name());
        return it->second;
      }
      case Kind::Func: {
        auto it = env.functions.find(e.function().ptr());
        if (it == env.functions.end()) throw std::logic_error("no model for function " + e.function().name());
        std::vector<Value> args;
        for (const auto& a : e.ops()) args.push_back(run(a));
        return it->second.eval(e.deriv(), args);
      }
      case Kind::Add: {
        std::vector<Value> ts;
        bool exact = true;
        for (const auto& op : e.ops()) {
          ts.push_back(run(op));
          exact = exact && ts.back().exact;
        }
        if (exact) {
          Rational s(0);
          for (const auto& t : ts) s += t.q;
          return Value::of(s);
        }
        Real s(0), m(0);
        for (const auto& t : ts) {
          Real r = t.real();
          s += r;
          m += mp::abs(r);
        }
        if (mp::abs(s) <= m * snap_threshold()) return Value::of(Real(0));
        return Value::of(s);
      }
      case Kind::Mul: {
        Value acc = Value::of(e.value());
        for (const auto& op : e.ops()) acc = mul(acc, run(op));
        return acc;
      }
      case Kind::Pow:
        return power(run(e.base()), run(e.exponent()));
      case Kind::Exp: {
        Value a = run(e.arg());
        if (a.is_zero()) return Value::of(Rational(1));
        return Value::of(Real(mp::exp(a.real())));
      }
      case Kind::LnAbs: {
        Value a = run(e.arg());
        if (a.is_zero()) throw SingularPoint("logarithm of zero");
        if (a.exact && (a.q == 1 || a.q == -1)) return Value::of(Rational(0));
        return Value::of(Real(mp::log(mp::abs(a.real()))));
      }
      case Kind::Abs: {
        Value a = run(e.arg());
        if (a.is_zero()) throw SingularPoint("absolute value at zero");
        if (a.exact) return Value::of(Rational(::abs(a.q)));
        return Value::of(Real(mp::abs(a.r)));
      }
      default:
        throw std::logic_error("cannot evaluate node");
    }
  }
};

}  // namespace

Real Value::real() const { return exact ? to_real(q) : r; }

std::string Value::str() const {
  if (exact) return q.get_str();
  return r.str(30);
}

Value FunctionModel::eval(const std::vector<std::uint8_t>& deriv, const std::vector<Value>& args) const {
  Value acc = Value::of(Rational(0));
  for (const auto& [m, c] : coeffs) {
    bool ok = true;
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m[i] < deriv[i]) ok = false;
    if (!ok) continue;
    Rational k = c;
    for (std::size_t i = 0; i < m.size(); ++i) k *= falling(m[i], deriv[i]);
    Value term = Value::of(k);
    for (std::size_t i = 0; i < m.size(); ++i) {
      int pw = m[i] - deriv[i];
      if (pw > 0) term = mul(term, power(args[i], Value::of(Rational(pw))));
    }
    acc = add(acc, term);
  }
  return acc;
}

Value evaluate(const Expr& e, const Environment& env) {
  Evaluator ev{env, {}};
  return ev.run(normalize(e));
}

Rational random_rational(std::mt19937_64& rng, long bound, bool nonzero) {
  std::uniform_int_distribution<long> num(-bound, bound);
  std::uniform_int_distribution<long> den(1, bound);
  for (;;) {
    Rational q(num(rng), den(rng));
    q.canonicalize();
    if (!nonzero || q != 0) return q;
  }
}

namespace {

void enumerate_monomials(std::size_t n, int degree, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (cur.size() == n) {
    out.push_back(cur);
    return;
  }
  int used = 0;
  for (int c : cur) used += c;
  for (int k = 0; used + k <= degree; ++k) {
    cur.push_back(k);
    enumerate_monomials(n, degree, cur, out);
    cur.pop_back();
  }
}

FunctionModel random_polynomial(std::size_t arity, std::mt19937_64& rng) {
  constexpr int kDegree = 5;
  FunctionModel m;
  std::vector<std::vector<int>> monos;
  std::vector<int> cur;
  enumerate_monomials(arity, kDegree, cur, monos);
  for (const auto& mono : monos) {
    Rational c = random_rational(rng, 9, false);
    if (c != 0) m.coeffs[mono] = c;
  }
  m.coeffs[std::vector<int>(arity, 0)] = random_rational(rng, 9, true);
  return m;
}

}  // namespace

void sample_environment(const Expr& e, std::mt19937_64& rng, long bound, Environment& env) {
  for (const SymbolInfo* si : e.free_symbols()) {
    if (env.symbols.count(si)) continue;
    Symbol s(si);
    Rational v;
    if (s.kind() == SymbolKind::Parameter) {
      std::uniform_int_distribution<int> coin(0, 1);
      if (s.constraint() == Constraint::SignUnit)
        v = coin(rng) ? 1 : -1;
      else if (s.constraint() == Constraint::Idempotent)
        v = coin(rng);
      else
        v = random_rational(rng, std::min(bound, 12L), true);
    } else {
      v = random_rational(rng, bound, true);
    }
    if (s.positive()) v = ::abs(v);
    env.symbols[si] = Value::of(v);
  }
  for (const FunctionInfo* fi : e.free_functions()) {
    if (env.functions.count(fi)) continue;
    Function f(fi);
    if (auto inv = f.inverse()) {
      Rational a = random_rational(rng, 9, true), b = random_rational(rng, 9, false);
      FunctionModel fm, gm;
      fm.coeffs[{0}] = b;
      fm.coeffs[{1}] = a;
      gm.coeffs[{0}] = -b / a;
      gm.coeffs[{1}] = 1 / a;
      env.functions[fi] = fm;
      env.functions[inv->ptr()] = gm;
      continue;
    }
    env.functions[fi] = random_polynomial(f.arity(), rng);
  }
}

}  // namespace wavegc
