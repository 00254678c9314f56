#pragma once

#include <functional>
#include <random>
#include <string>
#include <vector>

#include "wavegc/vecfield/vector_field.hpp"

namespace wavegc {

enum class ParamKind { Sign, Binary, Generic };

struct ParameterSpec {
  Symbol symbol;
  ParamKind kind = ParamKind::Generic;
};

using ParameterSample = std::vector<std::pair<Symbol, Rational>>;

struct ParameterConstraint {
  std::string text;
  std::function<bool(const ParameterSample&)> holds;
};

struct ClassificationCase {
  std::string id;    // "1".."22", "L8.1:0".."L8.1:3", "L8.3:0".."L8.3:3", "C9.1:1", "C9.1:2"
  std::string list;  // "table", "L8.1", "L8.3", "C9.1"
  std::string f_text, g_text;
  Expr f, g;
  std::vector<ParameterSpec> parameters;
  std::vector<ParameterConstraint> constraints;
  std::vector<std::string> generator_text;
  std::vector<VectorField> generators;  // extension only; the kernel is implicit
  int expected_dim = 3;
  bool formal = false;  // involves arbitrary functions F, G, mu, theta
  std::string notes;
};

const std::vector<ClassificationCase>& builtin_catalog();
const ClassificationCase* find_case(const std::string& id);

std::vector<VectorField> kernel_fields();

Rational sample_value(const ParameterSample& s, Symbol sym);
Bindings sample_bindings(const ParameterSample& s);
std::string sample_str(const ParameterSample& s);

// count samples satisfying every constraint. Discrete parameters cycle through their values; generic
// ones are random rationals away from the low-height values where subcases live.
std::vector<ParameterSample> sample_parameters(const ClassificationCase& c, std::mt19937_64& rng, int count);

}  // namespace wavegc
