#include "wavegc/vecfield/vector_field.hpp"

#include "wavegc/expr/names.hpp"
#include "wavegc/expr/parse.hpp"

namespace wavegc {

const char* chart_name(Chart c) {
  switch (c) {
    case Chart::Base: return "base";
    case Chart::Augmented: return "augmented";
    case Chart::Jet2: return "jet2";
  }
  return "?";
}

const std::vector<Symbol>& chart_coordinates(Chart c) {
  const auto& n = names();
  static const std::vector<Symbol> base{n.t, n.x, n.u};
  static const std::vector<Symbol> aug{n.t, n.x, n.u, n.u_x, n.fc, n.gc};
  static const std::vector<Symbol> jet{n.t, n.x, n.u, n.u_t, n.u_x, n.u_tt, n.u_tx, n.u_xx};
  switch (c) {
    case Chart::Base: return base;
    case Chart::Augmented: return aug;
    case Chart::Jet2: return jet;
  }
  return base;
}

int coordinate_index(Chart c, Symbol s) {
  const auto& cs = chart_coordinates(c);
  for (std::size_t i = 0; i < cs.size(); ++i)
    if (cs[i] == s) return static_cast<int>(i);
  return -1;
}

VectorField::VectorField(Chart chart) : chart_(chart), c_(chart_coordinates(chart).size()) {}

VectorField::VectorField(Chart chart, std::vector<Expr> coeffs) : chart_(chart), c_(std::move(coeffs)) {
  if (c_.size() != chart_coordinates(chart).size()) throw ChartError("coefficient count does not match chart");
  for (auto& e : c_) e = normalize(e);
  if (chart == Chart::Base) {
    const auto& n = names();
    for (const auto& e : c_)
      for (auto* si : e.free_symbols()) {
        Symbol s(si);
        if (s.kind() == SymbolKind::Jet || s.kind() == SymbolKind::Element || (s.is_jet() && s != n.u))
          throw ChartError("base-chart coefficient depends on " + s.name());
      }
  }
}

VectorField VectorField::base(const Expr& tau, const Expr& xi, const Expr& eta) {
  return VectorField(Chart::Base, {tau, xi, eta});
}

Expr prolong_ux(const Expr& tau, const Expr& xi, const Expr& eta) {
  const auto& n = names();
  Expr r = total_derivative(eta, Direction::X) - Expr(n.u_x) * total_derivative(xi, Direction::X) -
           Expr(n.u_t) * total_derivative(tau, Direction::X);
  if (r.has(n.u_t)) throw ChartError("u_x prolongation needs u_t: tau depends on x or u");
  return r;
}

VectorField VectorField::augmented(const Expr& tau, const Expr& xi, const Expr& eta, const Expr& f_coeff,
                                   const Expr& g_coeff) {
  return VectorField(Chart::Augmented, {tau, xi, eta, prolong_ux(tau, xi, eta), f_coeff, g_coeff});
}

VectorField VectorField::augmented_checked(std::vector<Expr> coeffs) {
  VectorField v(Chart::Augmented, std::move(coeffs));
  Expr expected = prolong_ux(v.c_[0], v.c_[1], v.c_[2]);
  if (!numerator(expected - v.c_[3]).is_zero())
    throw ChartError("u_x coefficient " + v.c_[3].str() + " differs from its prolongation " + expected.str());
  return v;
}

Expr VectorField::coeff(Symbol s) const {
  int i = coordinate_index(chart_, s);
  if (i < 0) return Expr();
  return c_[static_cast<std::size_t>(i)];
}

Expr VectorField::apply(const Expr& F) const {
  const auto& cs = chart_coordinates(chart_);
  std::vector<Expr> ts;
  for (std::size_t i = 0; i < cs.size(); ++i)
    if (!c_[i].is_zero() && F.has(cs[i])) ts.push_back(c_[i] * diff(F, cs[i]));
  return sum(ts);
}

bool VectorField::is_zero() const {
  for (const auto& e : c_)
    if (!e.is_zero()) return false;
  return true;
}

VectorField VectorField::project(Chart target) const {
  if (target == chart_) return *this;
  if (target == Chart::Base) return VectorField(Chart::Base, {c_[0], c_[1], c_[2]});
  if (chart_ == Chart::Base && target == Chart::Augmented) return augmented(c_[0], c_[1], c_[2], Expr(), Expr());
  throw ChartError(std::string("cannot project ") + chart_name(chart_) + " field to " + chart_name(target));
}

VectorField VectorField::map(const std::function<Expr(const Expr&)>& fn) const {
  std::vector<Expr> out;
  for (const auto& e : c_) out.push_back(fn(e));
  return VectorField(chart_, std::move(out));
}

std::string VectorField::str() const {
  const auto& cs = chart_coordinates(chart_);
  std::string out;
  for (std::size_t i = 0; i < cs.size(); ++i) {
    if (c_[i].is_zero()) continue;
    std::string t = c_[i].kind() == Kind::Add ? "(" + c_[i].str() + ")" : c_[i].str();
    if (out.empty())
      out = t;
    else if (t[0] == '-')
      out += " - " + t.substr(1);
    else
      out += " + " + t;
    out += "@" + cs[i].name();
  }
  return out.empty() ? "0" : out;
}

VectorField operator+(const VectorField& a, const VectorField& b) {
  if (a.chart_ != b.chart_) throw ChartError("chart mismatch");
  std::vector<Expr> c(a.c_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.c_[i] + b.c_[i];
  return VectorField(a.chart_, std::move(c));
}

VectorField operator-(const VectorField& a, const VectorField& b) { return a + Expr(-1) * b; }

VectorField operator*(const Expr& s, const VectorField& v) {
  std::vector<Expr> c(v.c_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = s * v.c_[i];
  return VectorField(v.chart_, std::move(c));
}

bool operator==(const VectorField& a, const VectorField& b) {
  if (a.chart_ != b.chart_) return false;
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    if (!numerator(a.c_[i] - b.c_[i]).is_zero()) return false;
  return true;
}

VectorField bracket(const VectorField& v, const VectorField& w) {
  if (v.chart() != w.chart())
    throw ChartError(std::string("bracket of ") + chart_name(v.chart()) + " and " + chart_name(w.chart()) + " fields");
  std::vector<Expr> c;
  for (std::size_t i = 0; i < v.coeffs().size(); ++i) c.push_back(v.apply(w.coeff(i)) - w.apply(v.coeff(i)));
  if (v.chart() == Chart::Augmented) return VectorField::augmented_checked(std::move(c));
  return VectorField(v.chart(), std::move(c));
}

VectorField parse_field(std::string_view text, Chart chart) {
  const SymbolTable& table = chart == Chart::Augmented ? SymbolTable::augmented() : SymbolTable::standard();
  Parser p(text, table);
  const auto& cs = chart_coordinates(chart);
  std::vector<Expr> c(cs.size());
  std::vector<bool> given(cs.size(), false);
  bool negate = false;
  if (p.accept('-')) negate = true;
  if (p.at_end()) p.fail("empty vector field");
  // a lone 0 is the zero field
  for (;;) {
    Expr coef = p.term();
    if (negate) coef = -coef;
    if (!p.accept('@')) {
      if (coef.is_zero() && p.at_end()) break;
      p.fail("expected '@coordinate'");
    }
    std::size_t at = p.offset();
    std::string name = p.identifier();
    int idx = -1;
    for (std::size_t i = 0; i < cs.size(); ++i)
      if (cs[i].name() == name) idx = static_cast<int>(i);
    if (idx < 0) p.fail("'" + name + "' is not a coordinate of the " + chart_name(chart) + " chart", at);
    c[static_cast<std::size_t>(idx)] += coef;
    given[static_cast<std::size_t>(idx)] = true;
    if (p.at_end()) break;
    if (p.accept('+'))
      negate = false;
    else if (p.accept('-'))
      negate = true;
    else
      p.fail("expected '+' or '-'");
  }
  try {
    if (chart == Chart::Augmented) {
      if (!given[3]) c[3] = prolong_ux(c[0], c[1], c[2]);
      return VectorField::augmented_checked(std::move(c));
    }
    return VectorField(chart, std::move(c));
  } catch (const ChartError& e) {
    p.fail(e.what(), 0);
  }
}

}  // namespace wavegc
