#include "wavegc/expr/symbol.hpp"

#include <cctype>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace wavegc {

namespace {

struct Registry {
  std::mutex mu;
  std::map<std::string, std::unique_ptr<SymbolInfo>, std::less<>> symbols;
  std::map<std::string, std::unique_ptr<FunctionInfo>, std::less<>> functions;
};

Registry& registry() {
  static Registry r;
  return r;
}

const char* kind_name(SymbolKind k) {
  switch (k) {
    case SymbolKind::Independent: return "independent";
    case SymbolKind::Dependent: return "dependent";
    case SymbolKind::Jet: return "jet";
    case SymbolKind::Parameter: return "parameter";
    case SymbolKind::Element: return "element";
    case SymbolKind::Auxiliary: return "auxiliary";
  }
  return "?";
}

Symbol intern(SymbolInfo proto) {
  auto& r = registry();
  std::lock_guard lock(r.mu);
  auto it = r.symbols.find(proto.name);
  if (it != r.symbols.end()) {
    const SymbolInfo& s = *it->second;
    if (s.kind != proto.kind || s.constraint != proto.constraint || s.positive != proto.positive)
      throw std::invalid_argument("symbol '" + proto.name + "' already registered as " +
                                  kind_name(s.kind));
    return Symbol(&s);
  }
  proto.name_hash = std::hash<std::string>{}(proto.name);
  auto owned = std::make_unique<SymbolInfo>(std::move(proto));
  const SymbolInfo* p = owned.get();
  r.symbols.emplace(p->name, std::move(owned));
  return Symbol(p);
}

bool valid_identifier(std::string_view s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

}  // namespace

std::strong_ordering operator<=>(Symbol a, Symbol b) {
  if (a.info_ == b.info_) return std::strong_ordering::equal;
  return a.info_->name <=> b.info_->name;
}

Symbol Symbol::independent(std::string_view name) {
  SymbolInfo s;
  s.name = std::string(name);
  s.kind = SymbolKind::Independent;
  return intern(std::move(s));
}

Symbol Symbol::dependent(std::string_view name) {
  if (name.find('_') != std::string_view::npos)
    throw std::invalid_argument("dependent variable names may not contain '_'");
  SymbolInfo s;
  s.name = std::string(name);
  s.kind = SymbolKind::Dependent;
  return intern(std::move(s));
}

Symbol Symbol::jet(Symbol dep, int nt, int nx) {
  if (!dep.valid() || dep.kind() != SymbolKind::Dependent)
    throw std::invalid_argument("jet of a non-dependent symbol");
  if (nt < 0 || nx < 0) throw std::invalid_argument("negative jet index");
  if (nt + nx == 0) return dep;
  SymbolInfo s;
  s.name = dep.name() + "_" + std::string(nt, 't') + std::string(nx, 'x');
  s.kind = SymbolKind::Jet;
  s.dependent = dep.ptr();
  s.nt = nt;
  s.nx = nx;
  return intern(std::move(s));
}

Symbol Symbol::parameter(std::string_view name, Constraint c, bool positive) {
  if (!valid_identifier(name)) throw std::invalid_argument("bad parameter name");
  SymbolInfo s;
  s.name = std::string(name);
  s.kind = SymbolKind::Parameter;
  s.constraint = c;
  s.positive = positive;
  return intern(std::move(s));
}

Symbol Symbol::element(std::string_view name) {
  SymbolInfo s;
  s.name = std::string(name);
  s.kind = SymbolKind::Element;
  return intern(std::move(s));
}

Symbol Symbol::auxiliary(std::string_view name, bool positive) {
  SymbolInfo s;
  s.name = std::string(name);
  s.kind = SymbolKind::Auxiliary;
  s.positive = positive;
  return intern(std::move(s));
}

std::optional<Symbol> Symbol::lookup(std::string_view name) {
  auto& r = registry();
  std::lock_guard lock(r.mu);
  auto it = r.symbols.find(name);
  if (it == r.symbols.end()) return std::nullopt;
  return Symbol(it->second.get());
}

Symbol Symbol::dependent_var() const {
  if (info_->kind == SymbolKind::Dependent) return *this;
  if (info_->kind == SymbolKind::Jet) return Symbol(info_->dependent);
  throw std::logic_error("not a jet variable: " + info_->name);
}

Symbol Symbol::jet_shift(int dt, int dx) const {
  return jet(dependent_var(), info_->nt + dt, info_->nx + dx);
}

std::string slot_code(const std::string& slot_name) {
  std::string out;
  for (char c : slot_name)
    if (c != '_') out += c;
  return out;
}

Function Function::declare(std::string_view name, std::vector<Symbol> slots) {
  if (!valid_identifier(name) || name.find('_') != std::string_view::npos)
    throw std::invalid_argument("bad function name '" + std::string(name) + "'");
  auto& r = registry();
  std::lock_guard lock(r.mu);
  auto it = r.functions.find(name);
  if (it != r.functions.end()) {
    if (it->second->slots != slots)
      throw std::invalid_argument("function '" + std::string(name) + "' redeclared with other slots");
    return Function(it->second.get());
  }
  auto f = std::make_unique<FunctionInfo>();
  f->name = std::string(name);
  f->slots = std::move(slots);
  for (Symbol s : f->slots) f->codes.push_back(slot_code(s.name()));
  f->name_hash = std::hash<std::string>{}(f->name);
  const FunctionInfo* p = f.get();
  r.functions.emplace(p->name, std::move(f));
  return Function(p);
}

std::optional<Function> Function::lookup(std::string_view name) {
  auto& r = registry();
  std::lock_guard lock(r.mu);
  auto it = r.functions.find(name);
  if (it == r.functions.end()) return std::nullopt;
  return Function(it->second.get());
}

void Function::link_inverse(Function f, Function g) {
  if (f.arity() != 1 || g.arity() != 1) throw std::invalid_argument("inverse link needs unary functions");
  auto& r = registry();
  std::lock_guard lock(r.mu);
  auto* fi = r.functions.at(f.name()).get();
  auto* gi = r.functions.at(g.name()).get();
  if ((fi->inverse && fi->inverse != gi) || (gi->inverse && gi->inverse != fi))
    throw std::invalid_argument("conflicting inverse link");
  fi->inverse = gi;
  gi->inverse = fi;
}

std::optional<Function> Function::inverse() const {
  if (info_->inverse == nullptr) return std::nullopt;
  return Function(info_->inverse);
}

}  // namespace wavegc
