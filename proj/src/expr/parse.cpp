#include "wavegc/expr/parse.hpp"

#include <cctype>
#include <functional>

#include "wavegc/expr/names.hpp"

namespace wavegc {

std::optional<Symbol> SymbolTable::symbol(std::string_view name) const {
  auto it = symbols_.find(name);
  if (it == symbols_.end()) return std::nullopt;
  return it->second;
}

std::optional<Function> SymbolTable::function(std::string_view name) const {
  auto it = functions_.find(name);
  if (it == functions_.end()) return std::nullopt;
  return it->second;
}

namespace {

SymbolTable build_standard() {
  SymbolTable t;
  const auto& n = names();
  for (Symbol s : {n.t, n.x, n.u, n.v, n.w, n.p, n.q, n.nu, n.d, n.b, n.k, n.delta, n.eps, n.eps2, n.c0, n.c1, n.c2,
                   n.c3, n.c4, n.z})
    t.add(s);
  for (Symbol dep : {n.u, n.v, n.w})
    for (int i = 0; i <= kMaxParseOrder; ++i)
      for (int j = 0; i + j <= kMaxParseOrder; ++j) t.add(Symbol::jet(dep, i, j));
  for (Function f : {n.f, n.g, n.F, n.G, n.phi, n.psi, n.mu, n.theta, n.thetahat, n.tau, n.xi, n.eta, n.alpha, n.beta})
    t.add(f);
  return t;
}

}  // namespace

const SymbolTable& SymbolTable::standard() {
  static const SymbolTable t = build_standard();
  return t;
}

const SymbolTable& SymbolTable::augmented() {
  static const SymbolTable t = [] {
    SymbolTable a = build_standard();
    a.add(names().fc);
    a.add(names().gc);
    return a;
  }();
  return t;
}

void Parser::fail(const std::string& msg, std::size_t at) const { throw ParseError(msg, at); }

void Parser::skip_ws() {
  while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
}

char Parser::peek() {
  skip_ws();
  return pos_ < text_.size() ? text_[pos_] : '\0';
}

bool Parser::at_end() { return peek() == '\0'; }

bool Parser::accept(char c) {
  if (peek() == c) {
    ++pos_;
    return true;
  }
  return false;
}

void Parser::expect(char c) {
  if (!accept(c)) fail(std::string("expected '") + c + "'");
}

std::string Parser::identifier() {
  skip_ws();
  std::size_t start = pos_;
  if (pos_ >= text_.size() || !std::isalpha(static_cast<unsigned char>(text_[pos_]))) fail("expected identifier");
  while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
  return std::string(text_.substr(start, pos_ - start));
}

Expr Parser::expression() {
  std::vector<Expr> terms{term()};
  for (;;) {
    if (accept('+'))
      terms.push_back(term());
    else if (accept('-'))
      terms.push_back(-term());
    else
      break;
  }
  return sum(terms);
}

Expr Parser::term() {
  Expr acc = unary();
  for (;;) {
    if (accept('*')) {
      acc = acc * unary();
    } else if (peek() == '/') {
      std::size_t at = pos_++;
      Expr d = unary();
      if (d.is_zero()) fail("division by zero", at);
      acc = acc / d;
    } else {
      break;
    }
  }
  return acc;
}

Expr Parser::unary() {
  if (accept('-')) return -unary();
  if (accept('+')) return unary();
  return power();
}

Expr Parser::power() {
  Expr b = primary();
  if (peek() == '^') {
    std::size_t at = pos_++;
    Expr x = unary();
    try {
      return pow(b, x);
    } catch (const DivisionByZero& e) {
      fail(e.what(), at);
    }
  }
  return b;
}

Expr Parser::primary() {
  char c = peek();
  if (c == '(') {
    ++pos_;
    Expr e = expression();
    expect(')');
    return e;
  }
  if (std::isdigit(static_cast<unsigned char>(c))) {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return Expr(Rational(Integer(std::string(text_.substr(start, pos_ - start)))));
  }
  if (std::isalpha(static_cast<unsigned char>(c))) {
    std::size_t at = pos_;
    std::string id = identifier();
    return resolve(id, at);
  }
  if (c == '\0') fail("unexpected end of input");
  fail(std::string("unexpected character '") + c + "'");
}

Expr Parser::apply(Function f, std::vector<std::uint8_t> deriv, std::size_t at) {
  if (peek() != '(') {
    std::vector<Expr> args;
    for (Symbol s : f.info().slots) args.emplace_back(s);
    return Expr::func(f, args, deriv);
  }
  ++pos_;
  std::vector<Expr> args;
  if (peek() != ')') {
    args.push_back(expression());
    while (accept(',')) args.push_back(expression());
  }
  expect(')');
  if (args.size() != f.arity())
    fail("arity mismatch for " + f.name() + ": expected " + std::to_string(f.arity()) + ", got " +
             std::to_string(args.size()),
         at);
  return Expr::func(f, args, deriv);
}

namespace {

// Splits a derivative suffix into slot codes, longest code first with backtracking.
bool decode_suffix(std::string_view s, const std::vector<std::string>& codes, std::vector<std::uint8_t>& out) {
  if (s.empty()) return true;
  std::vector<std::size_t> order(codes.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return codes[a].size() > codes[b].size(); });
  for (std::size_t i : order) {
    const auto& c = codes[i];
    if (c.empty() || s.substr(0, c.size()) != c) continue;
    ++out[i];
    if (decode_suffix(s.substr(c.size()), codes, out)) return true;
    --out[i];
  }
  return false;
}

}  // namespace

Expr Parser::resolve(const std::string& id, std::size_t at) {
  if (id == "ln") {
    expect('(');
    std::size_t inner = offset();
    if (peek() != 'a' || identifier() != "abs") fail("ln is only supported as ln(abs(...))", inner);
    expect('(');
    Expr a = expression();
    expect(')');
    expect(')');
    try {
      return lnabs(a);
    } catch (const DivisionByZero& e) {
      fail(e.what(), at);
    }
  }
  if (id == "exp" || id == "abs" || id == "lnabs") {
    expect('(');
    Expr a = expression();
    expect(')');
    try {
      if (id == "exp") return exp(a);
      if (id == "abs") return abs(a);
      return lnabs(a);
    } catch (const DivisionByZero& e) {
      fail(e.what(), at);
    }
  }
  bool call = peek() == '(';
  if (!call)
    if (auto s = table_.symbol(id)) return Expr(*s);
  if (auto f = table_.function(id)) return apply(*f, std::vector<std::uint8_t>(f->arity(), 0), at);
  auto us = id.find('_');
  if (us != std::string::npos) {
    std::string head = id.substr(0, us);
    std::string tail = id.substr(us + 1);
    if (auto f = table_.function(head)) {
      std::vector<std::uint8_t> d(f->arity(), 0);
      if (!decode_suffix(tail, f->info().codes, d)) fail("unknown partial '" + tail + "' of " + head, at);
      return apply(*f, d, at);
    }
    if (auto dep = table_.symbol(head); dep && dep->kind() == SymbolKind::Dependent) {
      int nt = 0, nx = 0;
      for (char ch : tail) {
        if (ch == 't')
          ++nt;
        else if (ch == 'x')
          ++nx;
        else
          fail("bad jet index in '" + id + "'", at);
      }
      if (nt + nx > kMaxParseOrder) fail("jet order above " + std::to_string(kMaxParseOrder) + " in '" + id + "'", at);
      return Expr(Symbol::jet(*dep, nt, nx));
    }
  }
  if (call) fail("unknown function '" + id + "'", at);
  fail("unknown identifier '" + id + "'", at);
}

Expr parse(std::string_view text, const SymbolTable& table) {
  Parser p(text, table);
  Expr e = p.expression();
  if (!p.at_end()) p.fail("trailing input");
  return e;
}

}  // namespace wavegc
