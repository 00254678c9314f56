#include <gtest/gtest.h>

#include <random>

#include "wavegc/detsys/detsys.hpp"
#include "wavegc/expr/evaluate.hpp"
#include "wavegc/expr/names.hpp"
#include "wavegc/expr/parse.hpp"

using namespace wavegc;

namespace {

Expr P(const char* s) { return parse(s); }
VectorField F(const char* s) { return parse_field(s, Chart::Base); }

// Random polynomial in (x, u_x) with small integer coefficients and a nonzero u_x-dependence.
Expr random_poly(std::mt19937_64& rng) {
  const auto& n = names();
  std::uniform_int_distribution<int> c(-4, 4);
  Expr r(0);
  for (int i = 0; i <= 2; ++i)
    for (int j = 0; j <= 3; ++j) r = r + Expr(c(rng)) * pow(Expr(n.x), Expr(i)) * pow(Expr(n.u_x), Expr(j));
  return r + pow(Expr(n.u_x), Expr(4));
}

}  // namespace

TEST(Residual, KernelWithSymbolicElements) {
  for (const char* q : {"1@t", "1@u", "t@u"})
    EXPECT_TRUE(numerator(invariance_residual(F(q), symbolic_f(), symbolic_g())).is_zero()) << q;
}

TEST(Residual, SpaceTranslationBreaksExponentialCoefficient) {
  Expr r = invariance_residual(F("1@x"), P("exp(2*x)*F(u_x)"), 0);
  EXPECT_EQ(r, P("-2*exp(2*x)*F(u_x)*u_xx"));
}

TEST(DeterminingSystem, PreliminarySplits) {
  auto sys = generate_determining_system();
  ASSERT_NE(sys.find("u_tx*u_t"), nullptr);
  EXPECT_TRUE(proportional(sys.find("u_tx*u_t")->equation, P("xi_u")));
  EXPECT_TRUE(proportional(sys.find("u_tx")->equation, P("xi_t - f*(tau_x + tau_u*u_x)")));
  EXPECT_TRUE(proportional(sys.find("u_xx*u_t")->equation, P("2*f*tau_u - (tau_x + tau_u*u_x)*f_ux")));
  EXPECT_TRUE(proportional(impose_preliminary(sys.find("u_t*u_t")->equation, false), P("eta_uu")));
}

TEST(DeterminingSystem, ReducedRows) {
  auto sys = generate_determining_system();
  auto row = [&](const char* m) { return impose_preliminary(sys.find(m)->equation); };
  EXPECT_TRUE(proportional(row("u_xx"), P("2*(tau_t - xi_x)*f + xi*f_x + (eta_x + (eta_u - xi_x)*u_x)*f_ux")));
  EXPECT_TRUE(proportional(row("u_t"), P("2*eta_tu - tau_tt + tau_xx*f + tau_x*g_ux")));
  EXPECT_TRUE(proportional(
      row("1"), P("eta_tt - xi_tt*u_x - (eta_xx + (2*eta_xu - xi_xx)*u_x)*f + (eta_u - 2*tau_t)*g - xi*g_x"
                  " - (eta_x + (eta_u - xi_x)*u_x)*g_ux")));
  EXPECT_FALSE(proportional(row("u_xx"), P("tau_t*f")));
}

TEST(CheckSymmetry, ProjectiveFieldOfMaximalCase) {
  auto sc = check_symmetry(P("delta*u_x^(-4)"), 0, F("t^2@t + t*u@u"));
  EXPECT_EQ(sc.verdict, Verdict::Zero);
}

TEST(CheckSymmetry, ScalingWithExponentialSlope) {
  auto sc = check_symmetry(P("delta*x^2*exp(2*u_x)"), P("nu*x*exp(2*u_x)"), F("x@x + u@u"));
  EXPECT_EQ(sc.verdict, Verdict::Zero);
}

TEST(CheckSymmetry, RejectsTranslationForExponentialCoefficient) {
  auto sc = check_symmetry(P("exp(2*x)"), 0, F("1@x"));
  EXPECT_EQ(sc.verdict, Verdict::Nonzero);
}

TEST(CheckSymmetry, KernelOnRandomSamples) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 20; ++i) {
    Expr f = random_poly(rng), g = random_poly(rng);
    for (const char* q : {"1@t", "1@u", "t@u"}) EXPECT_EQ(check_symmetry(f, g, F(q)).verdict, Verdict::Zero);
  }
}

TEST(Ansatz, MaximalDimensionSeven) {
  auto s = solve_within_ansatz(P("u_x^(-4)"), 0);
  EXPECT_EQ(s.dimension, 7);
  for (const auto& c : s.checks) EXPECT_EQ(c.verdict, Verdict::Zero);
}

TEST(Ansatz, PowerNonlinearityHasSix) {
  EXPECT_EQ(solve_within_ansatz(P("abs(u_x)^4"), 0).dimension, 6);
}

TEST(Ansatz, GenericCoefficientContainsKernel) {
  auto s = solve_within_ansatz(P("exp(2*x)*(1+u_x^2)"), 0);
  EXPECT_GE(s.dimension, 3);
  for (const char* q : {"1@t", "1@u", "t@u"}) {
    bool found = false;
    for (const auto& v : s.basis) found |= v == F(q);
    EXPECT_TRUE(found) << q;
  }
}

TEST(Ansatz, SolutionsSatisfySimplifiedSystem) {
  for (auto [f, g] : {std::pair{"u_x^(-4)", "u_x^(-3)"}, std::pair{"exp(2*u_x)", "2*u_x"}, std::pair{"u_x^2", "0"}}) {
    auto s = solve_within_ansatz(P(f), P(g));
    for (const auto& v : s.basis) EXPECT_EQ(simplified_system_violation(v), "") << f << " " << v.str();
  }
}

TEST(Ansatz, MonotoneUnderEnlargement) {
  AnsatzBasis small;
  small.tau = {P("1")};
  small.xi = {P("1")};
  small.eta = {P("1"), P("t")};
  AnsatzBasis big = AnsatzBasis::standard();
  for (const char* f : {"u_x^(-4)", "exp(2*u_x)", "abs(u_x)^3"}) {
    int a = solve_within_ansatz(P(f), 0, small).dimension;
    int b = solve_within_ansatz(P(f), 0, big).dimension;
    EXPECT_LE(a, b) << f;
  }
}

TEST(Ansatz, SingleTranslationBasis) {
  AnsatzBasis b;
  b.tau = {P("1")};
  auto s = solve_within_ansatz(P("u_x^2"), 0, b);
  ASSERT_EQ(s.dimension, 1);
  EXPECT_EQ(s.basis[0], F("1@t"));
}

TEST(SimplifiedSystem, FlagsViolations) {
  EXPECT_EQ(simplified_system_violation(F("x@t")), "tau_x");
  EXPECT_EQ(simplified_system_violation(F("t@t")), "");
  EXPECT_EQ(simplified_system_violation(F("t^2@t")), "2*eta_tu - tau_tt");
}
