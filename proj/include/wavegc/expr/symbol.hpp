#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace wavegc {

enum class SymbolKind : std::uint8_t {
  Independent,  // t, x
  Dependent,    // u, v, w
  Jet,          // u_t, u_tx, ...
  Parameter,    // p, q, delta, c0, a_ij ...
  Element,      // f, g as coordinates of the augmented chart
  Auxiliary,    // new-chart jets, dummies
};

enum class Constraint : std::uint8_t { None, SignUnit, Idempotent };

struct SymbolInfo {
  std::string name;
  SymbolKind kind = SymbolKind::Auxiliary;
  Constraint constraint = Constraint::None;
  bool positive = false;
  const SymbolInfo* dependent = nullptr;  // jets only
  int nt = 0;
  int nx = 0;
  std::size_t name_hash = 0;
};

// Interned handle; two symbols are equal iff they share the registry record.
class Symbol {
 public:
  Symbol() = default;
  explicit Symbol(const SymbolInfo* info) : info_(info) {}

  static Symbol independent(std::string_view name);
  static Symbol dependent(std::string_view name);
  static Symbol jet(Symbol dep, int nt, int nx);
  static Symbol parameter(std::string_view name, Constraint c = Constraint::None, bool positive = false);
  static Symbol element(std::string_view name);
  static Symbol auxiliary(std::string_view name, bool positive = false);
  static std::optional<Symbol> lookup(std::string_view name);

  bool valid() const { return info_ != nullptr; }
  const SymbolInfo& info() const { return *info_; }
  const SymbolInfo* ptr() const { return info_; }
  const std::string& name() const { return info_->name; }
  SymbolKind kind() const { return info_->kind; }
  Constraint constraint() const { return info_->constraint; }
  bool positive() const { return info_->positive; }

  bool is_jet() const { return info_->kind == SymbolKind::Jet || info_->kind == SymbolKind::Dependent; }
  // For a dependent variable or jet: the dependent variable itself.
  Symbol dependent_var() const;
  int order() const { return info_->nt + info_->nx; }
  Symbol jet_shift(int dt, int dx) const;

  friend bool operator==(Symbol a, Symbol b) { return a.info_ == b.info_; }
  friend std::strong_ordering operator<=>(Symbol a, Symbol b);

 private:
  const SymbolInfo* info_ = nullptr;
};

struct FunctionInfo {
  std::string name;
  std::vector<Symbol> slots;       // default arguments
  std::vector<std::string> codes;  // partial-derivative suffix per slot
  const FunctionInfo* inverse = nullptr;
  std::size_t name_hash = 0;
};

// Arbitrary-function or unknown-coefficient symbol with declared argument slots.
class Function {
 public:
  Function() = default;
  explicit Function(const FunctionInfo* info) : info_(info) {}

  static Function declare(std::string_view name, std::vector<Symbol> slots);
  static std::optional<Function> lookup(std::string_view name);
  // Declares g as the inverse of f (both unary).
  static void link_inverse(Function f, Function g);

  bool valid() const { return info_ != nullptr; }
  const FunctionInfo& info() const { return *info_; }
  const FunctionInfo* ptr() const { return info_; }
  const std::string& name() const { return info_->name; }
  std::size_t arity() const { return info_->slots.size(); }
  std::optional<Function> inverse() const;

  friend bool operator==(Function a, Function b) { return a.info_ == b.info_; }
  friend std::strong_ordering operator<=>(Function a, Function b) {
    return a.info_->name <=> b.info_->name;
  }

 private:
  const FunctionInfo* info_ = nullptr;
};

// Slot code used in printed partial suffixes: the slot name without underscores.
std::string slot_code(const std::string& slot_name);

}  // namespace wavegc
