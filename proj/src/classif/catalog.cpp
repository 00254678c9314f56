#include "wavegc/classif/catalog.hpp"

#include <stdexcept>

#include "wavegc/expr/evaluate.hpp"
#include "wavegc/expr/names.hpp"
#include "wavegc/expr/parse.hpp"

namespace wavegc {

namespace {

struct Row {
  const char* id;
  const char* list;
  const char* f;
  const char* g;
  std::vector<const char*> generators;
  std::vector<ParameterSpec> parameters;
  std::vector<ParameterConstraint> constraints;
  bool formal = false;
  const char* notes = "";
};

ParameterConstraint not_equal(Symbol s, Rational v) {
  std::string text = s.name() + " != " + v.get_str();
  return {text, [s, v](const ParameterSample& x) { return sample_value(x, s) != v; }};
}

ClassificationCase build(const Row& r) {
  ClassificationCase c;
  c.id = r.id;
  c.list = r.list;
  c.f_text = r.f;
  c.g_text = r.g;
  c.f = parse(r.f);
  c.g = parse(r.g);
  c.parameters = r.parameters;
  c.constraints = r.constraints;
  for (const char* gen : r.generators) {
    c.generator_text.emplace_back(gen);
    c.generators.push_back(parse_field(gen, Chart::Base));
  }
  c.expected_dim = 3 + static_cast<int>(c.generators.size());
  c.formal = r.formal;
  c.notes = r.notes;
  return c;
}

std::vector<ClassificationCase> make_catalog() {
  const auto& n = names();
  ParameterSpec delta{n.delta, ParamKind::Sign}, eps{n.eps, ParamKind::Binary}, eps2{n.eps2, ParamKind::Sign};
  ParameterSpec p{n.p}, q{n.q}, nu{n.nu};
  const char* pair1 = "t^2@t + t*u@u";
  const char* pair2 = "2*t@t + u@u";

  auto nu_p_delta = ParameterConstraint{"nu*(p+1) != delta", [n](const ParameterSample& s) {
                                          return sample_value(s, n.nu) * (sample_value(s, n.p) + 1) !=
                                                 sample_value(s, n.delta);
                                        }};
  auto nu_delta = ParameterConstraint{"nu != delta", [n](const ParameterSample& s) {
                                        return sample_value(s, n.nu) != sample_value(s, n.delta);
                                      }};
  auto case14 = ParameterConstraint{"(p,q) != (-1,-1), (-2,-3)", [n](const ParameterSample& s) {
                                      Rational pv = sample_value(s, n.p), qv = sample_value(s, n.q);
                                      return !(pv == -1 && qv == -1) && !(pv == -2 && qv == -3);
                                    }};
  auto case15 = ParameterConstraint{"eps = 0 if p = -1/2", [n](const ParameterSample& s) {
                                      return !(sample_value(s, n.p) == Rational(-1, 2) && sample_value(s, n.eps) != 0);
                                    }};

  std::vector<Row> rows{
      {"1", "table", "F(x - eps*lnabs(u_x))*u_x^(-1)", "G(x - eps*lnabs(u_x)) + 2*lnabs(u_x)",
       {"t@t + 2*eps@x + 2*(u + t^2)@u"}, {eps}, {}, true},
      {"2", "table", "F(x - eps*lnabs(u_x))*abs(u_x)^(2*p)", "G(x - eps*lnabs(u_x))*abs(u_x)^(2*p)*u_x",
       {"-p*t@t + eps@x + u@u"}, {eps, p}, {}, true},
      {"3", "table", "F(u_x)*exp(2*x)", "G(u_x)*exp(2*x)", {"t@t - 1@x"}, {}, {}, true},
      {"4", "table", "F(x)*exp(2*u_x)", "G(x)*exp(2*u_x)", {"t@t - x@u"}, {}, {}, true},
      {"5", "table", "F(u_x)", "G(u_x) + 2*eps*x", {"1@x + eps*t^2@u"}, {eps}, {}, true},
      {"6", "table", "delta*u_x^(-4)", "G(x)*u_x^(-3)", {pair1, pair2}, {delta}, {}, true},
      {"7", "table", "delta*exp(2*x)*abs(u_x)^(2*p)", "nu*exp(2*x)*abs(u_x)^(2*p)*u_x", {"p@x - u@u", "t@t - 1@x"},
       {delta, p, nu}, {not_equal(n.p, 0), not_equal(n.p, -2), nu_p_delta}, false,
       "reduces to case 19 for p != -1"},
      {"8", "table", "delta*x^2*exp(2*u_x)", "nu*x*exp(2*u_x)", {"x@x + u@u", "t@t - x@u"}, {delta, nu}, {nu_delta},
       false, "reduces to case 21 form"},
      {"9", "table", "F(u_x)", "0", {"1@x", "t@t + x@x + u@u"}, {}, {}, true},
      {"10", "table", "delta", "exp(-u_x)", {"1@x", "t@t + x@x + (u + x)@u"}, {delta}, {}},
      {"11", "table", "delta*exp(2*u_x)", "2*u_x", {"1@x", "t@t + 2*x@x + (2*u + x + t^2)@u"}, {delta}, {}},
      {"12", "table", "delta*exp(2*u_x)", "exp(u_x) + 2*epsilon*x", {"x@x + (u + x)@u", "1@x + epsilon*t^2@u"},
       {delta, eps2}, {}},
      {"13", "table", "delta*exp(2*u_x)", "exp(q*u_x)", {"1@x", "(1 - q)*t@t + (2 - q)*x@x + ((2 - q)*u + x)@u"},
       {delta, q}, {not_equal(n.q, 0)}},
      {"14", "table", "delta*abs(u_x)^(2*p)", "abs(u_x)^q",
       {"1@x", "(1 + p - q)*t@t + (1 + 2*p - q)*x@x + (2 + 2*p - q)*u@u"}, {delta, p, q}, {not_equal(n.q, 0), case14}},
      {"15", "table", "delta*abs(u_x)^(2*p)", "eps*abs(u_x)^(p + 1/2) + 2*x",
       {"1@x + t^2@u", "t@t + (1 + 2*p)*x@x + (3 + 2*p)*u@u"}, {delta, eps, p}, {case15}},
      {"16", "table", "delta*abs(u_x)^(2*p)", "2*lnabs(u_x)",
       {"1@x", "(1 + p)*t@t + (1 + 2*p)*x@x + (2*(1 + p)*u + t^2)@u"}, {delta, p}, {}, false,
       "contains C9.1:1 at p = -1"},
      {"17", "table", "delta*u_x^(-1)", "2*lnabs(u_x) + 2*x", {"1@x + t^2@u", "t@t + 2*(u + t^2)@u"}, {delta}, {}},
      {"18", "table", "delta*u_x^(-4)", "u_x^(-3)", {pair1, pair2, "1@x"}, {delta}, {}},
      {"19", "table", "delta*u_x^(-4)", "nu*x^(-1)*u_x^(-3)", {pair1, pair2, "2*x@x + u@u"}, {delta, nu},
       {not_equal(n.nu, 0)}},
      {"20", "table", "delta*abs(u_x)^(2*p)", "0", {"1@x", "t@t + x@x + u@u", "p*t@t - u@u"}, {delta, p},
       {not_equal(n.p, -2), not_equal(n.p, 0)}, false, "contains C9.1:2 at p = -1"},
      {"21", "table", "delta*exp(2*u_x)", "0", {"1@x", "t@t + x@x + u@u", "t@t - x@u"}, {delta}, {}},
      {"22", "table", "delta*u_x^(-4)", "0", {pair1, pair2, "1@x", "2*x@x + u@u"}, {delta}, {}},

      {"L8.1:0", "L8.1", "delta*u_x^(-4)", "mu(x)*u_x^(-3)", {pair1, pair2}, {delta}, {}, true},
      {"L8.1:1", "L8.1", "delta*u_x^(-4)", "u_x^(-3)", {pair1, pair2, "1@x"}, {delta}, {}},
      {"L8.1:2", "L8.1", "delta*u_x^(-4)", "nu*x^(-1)*u_x^(-3)", {pair1, pair2, "2*x@x + u@u"}, {delta, nu},
       {not_equal(n.nu, 0)}},
      {"L8.1:3", "L8.1", "delta*u_x^(-4)", "0", {pair1, pair2, "1@x", "2*x@x + u@u"}, {delta}, {}},
      {"L8.3:0", "L8.3", "theta(x)*u_x^(-4)", "0", {pair1, pair2}, {}, {}, true},
      {"L8.3:1", "L8.3", "delta*exp(2*x)*u_x^(-4)", "0", {pair1, pair2, "2@x + u@u"}, {delta}, {}},
      {"L8.3:2", "L8.3", "delta*abs(x)^(2*p)*u_x^(-4)", "0", {pair1, pair2, "2*x@x + (p + 1)*u@u"}, {delta, p},
       {not_equal(n.p, 0)}},
      {"L8.3:3", "L8.3", "delta*u_x^(-4)", "0", {pair1, pair2, "1@x", "2*x@x + u@u"}, {delta}, {}},
      {"C9.1:1", "C9.1", "delta*u_x^(-2)", "2*lnabs(u_x)", {"1@x", "x@x - t^2@u"}, {delta}, {}, false,
       "merged into case 16 at p = -1"},
      {"C9.1:2", "C9.1", "delta*u_x^(-2)", "0", {"1@x", "x@x", "t@t + u@u"}, {delta}, {}, false,
       "merged into case 20 at p = -1"},
  };
  std::vector<ClassificationCase> out;
  for (const auto& r : rows) out.push_back(build(r));
  return out;
}

// Low-height rationals host the special subcases (p = -1, -2, q = 1, ...); generic samples avoid them.
bool low_height(const Rational& v) {
  return abs(v.get_num()) <= 4 && v.get_den() <= 4;
}

}  // namespace

const std::vector<ClassificationCase>& builtin_catalog() {
  static const std::vector<ClassificationCase> c = make_catalog();
  return c;
}

const ClassificationCase* find_case(const std::string& id) {
  for (const auto& c : builtin_catalog())
    if (c.id == id) return &c;
  return nullptr;
}

std::vector<VectorField> kernel_fields() {
  return {parse_field("1@t", Chart::Base), parse_field("1@u", Chart::Base), parse_field("t@u", Chart::Base)};
}

Rational sample_value(const ParameterSample& s, Symbol sym) {
  for (const auto& [k, v] : s)
    if (k == sym) return v;
  throw std::out_of_range("sample has no value for " + sym.name());
}

Bindings sample_bindings(const ParameterSample& s) {
  Bindings b;
  for (const auto& [k, v] : s) b.emplace_back(Expr(k), Expr(v));
  return b;
}

std::string sample_str(const ParameterSample& s) {
  std::string out;
  for (const auto& [k, v] : s) out += (out.empty() ? "" : ", ") + k.name() + "=" + v.get_str();
  return out.empty() ? "-" : out;
}

std::vector<ParameterSample> sample_parameters(const ClassificationCase& c, std::mt19937_64& rng, int count) {
  std::vector<ParameterSample> out;
  int attempts = 0;
  for (int k = 0; static_cast<int>(out.size()) < count; ++k) {
    if (++attempts > 1000) throw std::runtime_error("cannot sample parameters for case " + c.id);
    ParameterSample s;
    int digit = static_cast<int>(out.size());
    for (const auto& spec : c.parameters) {
      switch (spec.kind) {
        case ParamKind::Sign:
          s.emplace_back(spec.symbol, digit % 2 == 0 ? Rational(1) : Rational(-1));
          digit /= 2;
          break;
        case ParamKind::Binary:
          s.emplace_back(spec.symbol, Rational(digit % 2));
          digit /= 2;
          break;
        case ParamKind::Generic: {
          Rational v;
          do v = random_rational(rng, 40, true);
          while (low_height(v));
          s.emplace_back(spec.symbol, v);
          break;
        }
      }
    }
    bool ok = true;
    for (const auto& con : c.constraints) ok = ok && con.holds(s);
    if (ok) out.push_back(std::move(s));
  }
  return out;
}

}  // namespace wavegc
