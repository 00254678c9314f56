#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "wavegc/expr/expr.hpp"

namespace wavegc {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, std::size_t offset)
      : std::runtime_error(msg + " at byte " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// Names visible to the parser.
class SymbolTable {
 public:
  void add(Symbol s) { symbols_[s.name()] = s; }
  void add(Function f) { functions_[f.name()] = f; }
  std::optional<Symbol> symbol(std::string_view name) const;
  std::optional<Function> function(std::string_view name) const;

  // t, x; u, v, w with jets; the standard parameters and function symbols.
  static const SymbolTable& standard();
  // standard plus the element coordinates f, g.
  static const SymbolTable& augmented();

 private:
  std::map<std::string, Symbol, std::less<>> symbols_;
  std::map<std::string, Function, std::less<>> functions_;
};

class Parser {
 public:
  Parser(std::string_view text, const SymbolTable& table) : text_(text), table_(table) {}

  Expr expression();  // sum level
  Expr term();        // product level
  bool at_end();
  bool accept(char c);
  void expect(char c);
  std::string identifier();
  std::size_t offset() const { return pos_; }
  [[noreturn]] void fail(const std::string& msg, std::size_t at) const;
  [[noreturn]] void fail(const std::string& msg) const { fail(msg, pos_); }

 private:
  Expr unary();
  Expr power();
  Expr primary();
  Expr resolve(const std::string& name, std::size_t at);
  Expr apply(Function f, std::vector<std::uint8_t> deriv, std::size_t at);
  void skip_ws();
  char peek();

  std::string_view text_;
  const SymbolTable& table_;
  std::size_t pos_ = 0;
};

Expr parse(std::string_view text, const SymbolTable& table = SymbolTable::standard());

}  // namespace wavegc
