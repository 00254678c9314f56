#include <chrono>
#include <random>

#include "wavegc/classif/campaigns.hpp"
#include "wavegc/expr/evaluate.hpp"
#include "wavegc/expr/names.hpp"
#include "wavegc/vecfield/equivalence.hpp"
#include "wavegc/vecfield/prolong.hpp"

namespace wavegc {

namespace {

// Tallies many checks into one, keeping the first non-passing detail.
class Suite {
 public:
  explicit Suite(std::string name) : name_(std::move(name)) {}
  void add(const Check& c) {
    ++count_;
    outcome_ = combine(outcome_, c.outcome);
    if (c.outcome == Outcome::Fail) ++fail_;
    if (c.outcome == Outcome::Undecided) ++undecided_;
    if (c.outcome != Outcome::Pass && detail_.empty()) detail_ = c.name + ": " + c.detail;
  }
  Check result() const {
    std::string d = std::to_string(fail_) + " failed, " + std::to_string(undecided_) + " undecided";
    return {name_ + " (" + std::to_string(count_) + " instances)", outcome_,
            outcome_ == Outcome::Pass ? "" : d + "; first: " + detail_};
  }

 private:
  std::string name_, detail_;
  int count_ = 0, fail_ = 0, undecided_ = 0;
  Outcome outcome_ = Outcome::Pass;
};

Rational small(std::mt19937_64& rng) { return random_rational(rng, 5, false); }

// Random polynomial of total degree <= 2 in the given symbols.
Expr random_poly(std::mt19937_64& rng, const std::vector<Symbol>& vars) {
  Expr out(small(rng));
  for (std::size_t i = 0; i < vars.size(); ++i) {
    out += Expr(small(rng)) * Expr(vars[i]);
    for (std::size_t j = i; j < vars.size(); ++j) out += Expr(small(rng)) * Expr(vars[i]) * Expr(vars[j]);
  }
  return out;
}

Expr random_unary(std::mt19937_64& rng, const Expr& x) {
  switch (rng() % 4) {
    case 0: return exp(Expr(random_rational(rng, 3, true)) * x);
    case 1: return x * x + Expr(small(rng)) * x;
    case 2: return Expr(random_rational(rng, 5, true));
    default: return x;
  }
}

// Random element of the equivalence algebra.
VectorField random_equivalence_field(std::mt19937_64& rng) {
  namespace gen = generator;
  Expr x(names().x);
  auto c = [&] { return Expr(small(rng)); };
  Expr phi = Expr(small(rng)) + Expr(small(rng)) * x + Expr(small(rng)) * x * x;
  Expr psi = Expr(small(rng)) * x + Expr(small(rng)) * x * x + Expr(small(rng)) * exp(x);
  return c() * gen::Du() + c() * gen::Dt() + c() * gen::Pt() + c() * gen::F1() + c() * gen::F2() + gen::D(phi) +
         gen::G(psi);
}

PointTransform random_transform(std::mt19937_64& rng, bool moebius) {
  EquivalenceParams p;
  auto q = [&] { return Expr(random_rational(rng, 9, true)); };
  p.c0 = q();
  p.c1 = q();
  p.c2 = q();
  p.c3 = q();
  p.c4 = q();
  Expr x(names().x);
  Rational a = random_rational(rng, 9, true), b = random_rational(rng, 9, true);
  if (moebius) {
    if (a == b) b += 1;
    p.phi = (Expr(a) * x + Expr(b)) / (x + Expr(1));
    p.phi_inverse = (Expr(b) - x) / (x - Expr(a));
  } else {
    p.phi = Expr(a) * x + Expr(b);
    p.phi_inverse = (x - Expr(b)) / Expr(a);
  }
  p.psi = Expr(small(rng)) * x * x + Expr(small(rng)) * x;
  return equivalence_transform(p);
}

// Random expression on the second-order jet space.
Expr random_jet_expression(std::mt19937_64& rng) {
  const auto& n = names();
  std::vector<Expr> atoms{Expr(n.t),    Expr(n.x),    Expr(n.u),    Expr(n.u_t), Expr(n.u_x),
                          Expr(n.u_tt), Expr(n.u_tx), Expr(n.u_xx), symbolic_f(), exp(Expr(n.u_x)),
                          lnabs(Expr(n.u_t))};
  Expr out(0);
  int terms = 1 + static_cast<int>(rng() % 4);
  for (int k = 0; k < terms; ++k) {
    Expr term(random_rational(rng, 9, true));
    int factors = 1 + static_cast<int>(rng() % 3);
    for (int j = 0; j < factors; ++j) term = term * atoms[rng() % atoms.size()];
    out += term;
  }
  return out;
}

}  // namespace

VerificationReport verify_properties(const CampaignOptions& o, const PropertyCounts& counts) {
  const auto& n = names();
  VerificationReport rep;
  CaseRecord rec;
  rec.campaign = "properties";
  rec.id = "properties";
  rec.title = "randomized identities";
  auto start = std::chrono::steady_clock::now();

  {
    std::mt19937_64 rng(o.seed ^ 0x6a61636fULL);
    Suite s("Jacobi identity");
    std::vector<Symbol> vars{n.t, n.x, n.u};
    auto field = [&] { return VectorField::base(random_poly(rng, vars), random_poly(rng, vars), random_poly(rng, vars)); };
    for (int k = 0; k < counts.jacobi; ++k) {
      VectorField a = field(), b = field(), c = field();
      VectorField j = bracket(bracket(a, b), c) + bracket(bracket(b, c), a) + bracket(bracket(c, a), b);
      s.add(field_check("triple " + std::to_string(k + 1), j, VectorField(Chart::Base)));
    }
    rec.add(s.result());
  }

  {
    std::mt19937_64 rng(o.seed ^ 0x70726f6cULL);
    Suite s("prolongation is a homomorphism");
    Expr t(n.t), x(n.x), u(n.u);
    auto field = [&] {
      Expr tau = random_poly(rng, {n.t, n.x});
      Expr xi = random_poly(rng, {n.t, n.x}) + Expr(small(rng)) * random_unary(rng, x);
      Expr eta = random_poly(rng, {n.t, n.x, n.u}) + Expr(small(rng)) * u * u * u;
      return VectorField::base(tau, xi, eta);
    };
    for (int k = 0; k < counts.prolongation; ++k) {
      VectorField v = field(), w = field();
      VectorField lhs = prolong2(bracket(v, w)).as_field();
      VectorField rhs = bracket(prolong2(v).as_field(), prolong2(w).as_field());
      s.add(field_check("pair " + std::to_string(k + 1), lhs, rhs));
    }
    rec.add(s.result());
  }

  {
    std::mt19937_64 rng(o.seed ^ 0x66756e63ULL);
    Suite s("push-forward is functorial");
    for (int k = 0; k < counts.functoriality; ++k) {
      // at most one Moebius factor keeps the composite's coefficients small
      bool moebius_p = k % 4 == 1, moebius_q = k % 4 == 3;
      PointTransform p = random_transform(rng, moebius_p), q = random_transform(rng, moebius_q);
      VectorField v = random_equivalence_field(rng);
      s.add(field_check("composite " + std::to_string(k + 1), pushforward(p.after(q), v),
                        pushforward(p, pushforward(q, v))));
    }
    rec.add(s.result());
  }

  {
    std::mt19937_64 rng(o.seed ^ 0x636f6d6dULL);
    Suite s("total derivatives commute");
    for (int k = 0; k < counts.commutation; ++k) {
      Expr e = random_jet_expression(rng);
      Expr d = total_derivative(total_derivative(e, Direction::X), Direction::T) -
               total_derivative(total_derivative(e, Direction::T), Direction::X);
      s.add(zero_check("expression " + std::to_string(k + 1), d));
    }
    rec.add(s.result());
  }

  rec.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  rep.append(rec);
  return rep;
}

}  // namespace wavegc
