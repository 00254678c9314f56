#include <string>

#include "wavegc/expr/expr.hpp"

namespace wavegc {

namespace {

enum class Style { Parse, Pretty };

std::string print(const Expr& e, Style st);

bool default_args(const Expr& e) {
  const auto& slots = e.function().info().slots;
  for (std::size_t i = 0; i < slots.size(); ++i)
    if (!e.ops()[i].is_sym(slots[i])) return false;
  return true;
}

std::string print_func(const Expr& e, Style st) {
  const auto& info = e.function().info();
  std::string out = info.name;
  std::string suffix;
  bool braces = false;
  for (std::size_t i = 0; i < e.deriv().size(); ++i)
    for (int k = 0; k < e.deriv()[i]; ++k) {
      if (st == Style::Parse) {
        suffix += info.codes[i];
      } else {
        suffix += info.slots[i].name();
        if (info.slots[i].name().size() > 1) braces = true;
      }
    }
  if (!suffix.empty()) out += braces ? "_{" + suffix + "}" : "_" + suffix;
  if (st == Style::Pretty && default_args(e)) return out;
  out += "(";
  for (std::size_t i = 0; i < e.ops().size(); ++i) {
    if (i) out += ",";
    out += print(e.ops()[i], st);
  }
  return out + ")";
}

bool is_atomic(const Expr& e) {
  switch (e.kind()) {
    case Kind::Sym:
    case Kind::Func:
    case Kind::Exp:
    case Kind::LnAbs:
    case Kind::Abs:
      return true;
    case Kind::Const:
      return is_integer(e.value()) && e.value() >= 0;
    default:
      return false;
  }
}

std::string print_factor(const Expr& f, Style st) {
  if (f.kind() == Kind::Add || (f.kind() == Kind::Const && f.value() < 0)) return "(" + print(f, st) + ")";
  return print(f, st);
}

std::string print_pow(const Expr& e, Style st) {
  const Expr& b = e.base();
  const Expr& x = e.exponent();
  std::string bs = is_atomic(b) ? print(b, st) : "(" + print(b, st) + ")";
  bool bare = (x.kind() == Kind::Const && is_integer(x.value()) && x.value() >= 0) || x.kind() == Kind::Sym;
  std::string xs = bare ? print(x, st) : "(" + print(x, st) + ")";
  return bs + "^" + xs;
}

std::string print(const Expr& e, Style st) {
  switch (e.kind()) {
    case Kind::Const:
      return e.value().get_str();
    case Kind::Sym:
      return e.symbol().name();
    case Kind::Func:
      return print_func(e, st);
    case Kind::Pow:
      return print_pow(e, st);
    case Kind::Exp:
      return "exp(" + print(e.arg(), st) + ")";
    case Kind::LnAbs:
      return (st == Style::Parse ? "lnabs(" : "ln|") + print(e.arg(), st) + (st == Style::Parse ? ")" : "|");
    case Kind::Abs:
      return "abs(" + print(e.arg(), st) + ")";
    case Kind::Mul: {
      std::string out;
      const Rational& c = e.value();
      if (c == -1)
        out = "-";
      else if (c != 1)
        out = c.get_str() + "*";
      for (std::size_t i = 0; i < e.ops().size(); ++i) {
        if (i) out += "*";
        out += print_factor(e.ops()[i], st);
      }
      return out;
    }
    case Kind::Add: {
      std::string out;
      for (std::size_t i = 0; i < e.ops().size(); ++i) {
        std::string t = print(e.ops()[i], st);
        if (i == 0)
          out = t;
        else if (!t.empty() && t[0] == '-')
          out += " - " + t.substr(1);
        else
          out += " + " + t;
      }
      return out;
    }
  }
  return "?";
}

}  // namespace

std::string Expr::str() const { return print(*this, Style::Parse); }
std::string Expr::pretty() const { return print(*this, Style::Pretty); }

}  // namespace wavegc
