#include <gtest/gtest.h>

#include "wavegc/expr/names.hpp"
#include "wavegc/expr/parse.hpp"
#include "wavegc/vecfield/equivalence.hpp"
#include "wavegc/vecfield/prolong.hpp"

using namespace wavegc;
namespace gen = wavegc::generator;

namespace {

Expr P(const char* s) { return parse(s); }

bool same(const Expr& a, const Expr& b) { return is_zero(a - b) == Verdict::Zero; }

bool same(const VectorField& a, const VectorField& b) {
  if (a.chart() != b.chart()) return false;
  for (std::size_t i = 0; i < a.coeffs().size(); ++i)
    if (!same(a.coeff(i), b.coeff(i))) return false;
  return true;
}

}  // namespace

TEST(Bracket, TranslationAndDilationInTime) { EXPECT_TRUE(same(bracket(gen::Pt(), gen::Dt()), gen::Pt())); }

TEST(Bracket, DiffeomorphismGenerators) {
  Expr a = P("alpha(x)"), b = P("beta(x)");
  Expr c = a * diff(b, names().x) - diff(a, names().x) * b;
  EXPECT_TRUE(same(bracket(gen::D(a), gen::D(b)), gen::D(c)));
}

TEST(Bracket, ConstantFieldsCommute) {
  auto dt = parse_field("1@t", Chart::Base);
  auto dx = parse_field("1@x", Chart::Base);
  EXPECT_TRUE(bracket(dt, dx).is_zero());
}

TEST(Bracket, ChartMismatchIsAnError) {
  EXPECT_THROW(bracket(parse_field("1@t", Chart::Base), gen::Pt()), ChartError);
}

TEST(VectorField, AugmentedFieldChecksProlongation) {
  const auto& n = names();
  std::vector<Expr> c{0, 0, Expr(n.u), 0, 0, Expr(n.gc)};
  EXPECT_THROW(VectorField::augmented_checked(c), ChartError);
  c[3] = Expr(n.u_x);
  EXPECT_TRUE(same(VectorField::augmented_checked(c), gen::Du()));
}

TEST(VectorField, BaseChartRejectsJets) {
  EXPECT_THROW(VectorField::base(P("u_x"), 0, 0), ChartError);
}

TEST(VectorField, ParseTextualForm) {
  auto v = parse_field("2*t@t + u@u", Chart::Base);
  EXPECT_EQ(v.coeff(0), P("2*t"));
  EXPECT_TRUE(v.coeff(1).is_zero());
  EXPECT_EQ(v.coeff(2), P("u"));
  EXPECT_EQ(parse_field(v.str(), Chart::Base), v);
}

TEST(Prolong, TranslationHasNoProlongation) {
  auto pr = prolong2(VectorField::base(1, 0, 0));
  for (const Expr* e : {&pr.eta_t, &pr.eta_x, &pr.eta_tt, &pr.eta_tx, &pr.eta_xx}) EXPECT_TRUE(e->is_zero());
}

TEST(Prolong, GalileanGauge) {
  auto pr = prolong2(VectorField::base(0, 0, P("t")));
  EXPECT_EQ(pr.eta_t, Expr(1));
  for (const Expr* e : {&pr.eta_x, &pr.eta_tt, &pr.eta_tx, &pr.eta_xx}) EXPECT_TRUE(e->is_zero());
}

TEST(Prolong, ScalingField) {
  auto pr = prolong2(VectorField::base(P("2*t"), 0, P("u")));
  EXPECT_EQ(pr.eta_t, P("-u_t"));
  EXPECT_EQ(pr.eta_x, P("u_x"));
  EXPECT_EQ(pr.eta_tt, P("-3*u_tt"));
  EXPECT_EQ(pr.eta_tx, P("-u_tx"));
  EXPECT_EQ(pr.eta_xx, P("u_xx"));
}

TEST(Prolong, GeneralFieldMatchesRecursion) {
  // eta^x = D_x(eta) - u_t D_x(tau) - u_x D_x(xi), and eta^xx by one more step.
  Expr tau = P("tau(t,x,u)"), xi = P("xi(t,x,u)"), eta = P("eta(t,x,u)");
  auto pr = prolong2(VectorField::base(tau, xi, eta));
  auto step = [&](const Expr& e, Direction d, const Expr& jt, const Expr& jx) {
    return total_derivative(e, d) - jt * total_derivative(tau, d) - jx * total_derivative(xi, d);
  };
  Expr ex = step(eta, Direction::X, P("u_t"), P("u_x"));
  EXPECT_TRUE(same(pr.eta_x, ex));
  EXPECT_TRUE(same(pr.eta_xx, step(ex, Direction::X, P("u_tx"), P("u_xx"))));
  Expr et = step(eta, Direction::T, P("u_t"), P("u_x"));
  EXPECT_TRUE(same(pr.eta_tt, step(et, Direction::T, P("u_tt"), P("u_tx"))));
  EXPECT_TRUE(same(pr.eta_tx, step(et, Direction::X, P("u_tt"), P("u_tx"))));
}

TEST(Transform, TimeScaling) {
  Expr f = P("f(x,u_x)"), g = P("g(x,u_x)"), c1 = P("c1");
  auto pt = elementary::scale_t(c1);
  auto r = transform_equation(pt, f, g);
  ASSERT_TRUE(r.ok);
  ASSERT_TRUE(r.f_new && r.g_new);
  EXPECT_TRUE(same(*r.f_new, f / (c1 * c1)));
  EXPECT_TRUE(same(*r.g_new, g / (c1 * c1)));
}

TEST(Transform, IdentityKeepsEquation) {
  Expr f = P("F(x)*exp(2*u_x)"), g = P("x*u_x^3");
  auto r = transform_equation(PointTransform::identity(), f, g);
  ASSERT_TRUE(r.ok);
  EXPECT_EQ(*r.f_new, f);
  EXPECT_EQ(*r.g_new, g);
}

TEST(Transform, SpatialGauge) {
  Expr f = P("f(x,u_x)"), g = P("g(x,u_x)"), psi = P("psi(x)");
  auto pt = elementary::gauge_x(psi);
  auto r = transform_equation(pt, f, g);
  ASSERT_TRUE(r.ok);
  EXPECT_TRUE(same(r.f_pulled, f));
  EXPECT_TRUE(same(r.g_pulled, g - P("psi_xx(x)") * f));
  EXPECT_TRUE(same(pt.slope(), P("u_x + psi_x")));
  Expr back = P("u_x - psi_x");
  Expr f_target = substitute_plain(f, {{P("u_x"), back}});
  Expr g_target = substitute_plain(g - P("psi_xx") * f, {{P("u_x"), back}});
  EXPECT_EQ(matches_target(pt, r, f_target, g_target), Verdict::Zero);
  EXPECT_EQ(matches_target(pt, r, f_target, g_target + 1), Verdict::Nonzero);
}

TEST(Transform, LeavingTheClassReportsObstruction) {
  auto pt = PointTransform(P("t"), P("x"), P("(t+1)*u"));
  auto r = transform_equation(pt, P("f(x,u_x)"), P("g(x,u_x)"));
  EXPECT_FALSE(r.ok);
  EXPECT_EQ(r.verdict, Verdict::Nonzero);
  EXPECT_FALSE(r.obstruction.is_zero());
}

TEST(Transform, RejectsNonFiberPreservingData) {
  EXPECT_THROW(PointTransform(P("t+x"), P("x"), P("u")), TransformError);
  EXPECT_THROW(PointTransform(P("t"), P("x"), P("u^2")), TransformError);
  EXPECT_THROW(PointTransform(P("t"), P("0*x+1"), P("u")), TransformError);
}

TEST(Equivalence, QuadraticGaugeShiftsSource) {
  EquivalenceParams p;
  p.c4 = P("c4");
  auto [ft, gt] = apply_equivalence(p, P("f"), P("g"));
  EXPECT_EQ(ft, P("f"));
  EXPECT_EQ(gt, P("g + 2*c4"));
}

TEST(Equivalence, IdentityParameters) {
  auto [ft, gt] = apply_equivalence(EquivalenceParams{}, P("f"), P("g"));
  EXPECT_EQ(ft, P("f"));
  EXPECT_EQ(gt, P("g"));
}

TEST(Equivalence, DegenerateParametersRejected) {
  EquivalenceParams p;
  p.c1 = 0;
  EXPECT_THROW(apply_equivalence(p, P("f"), P("g")), TransformError);
}

TEST(Equivalence, ChangeOfSpaceAgreesWithChangeOfVariables) {
  EquivalenceParams p;
  p.phi = P("phi(x)");
  auto [ft, gt] = apply_equivalence(p, P("f"), P("g"));
  EXPECT_TRUE(same(ft, P("phi_x^2*f")));
  EXPECT_TRUE(same(gt, P("g + phi_xx*u_x*f/phi_x")));
  auto r = transform_equation(equivalence_transform(p), P("f"), P("g"));
  ASSERT_TRUE(r.ok);
  EXPECT_TRUE(same(r.f_pulled, ft));
  EXPECT_TRUE(same(r.g_pulled, gt));
}

TEST(Equivalence, FullGroupAgreesWithChangeOfVariables) {
  EquivalenceParams p;
  p.c0 = P("c0");
  p.c1 = P("c1");
  p.c2 = P("c2");
  p.c3 = P("c3");
  p.c4 = P("c4");
  p.phi = P("phi(x)");
  p.psi = P("psi(x)");
  auto [ft, gt] = apply_equivalence(p, P("f"), P("g"));
  auto r = transform_equation(equivalence_transform(p), P("f"), P("g"));
  ASSERT_TRUE(r.ok);
  EXPECT_TRUE(same(r.f_pulled, ft));
  EXPECT_TRUE(same(r.g_pulled, gt));
}

TEST(Pushforward, SpatialGaugeOnUScaling) {
  Expr psi = P("psi(x)");
  EXPECT_TRUE(same(pushforward(elementary::gauge_x(psi), gen::Du()), gen::Du() - gen::G(psi)));
}

TEST(Pushforward, DiffeomorphismOnGauge) {
  Expr theta = P("theta(x)"), psi = P("psi(x)");
  Expr psi_of_inverse = substitute_plain(psi, {{P("x"), P("thetahat(x)")}});
  auto pushed = pushforward(elementary::change_x(theta, P("thetahat(x)")), gen::G(psi));
  EXPECT_TRUE(same(pushed, gen::G(psi_of_inverse)));
}

TEST(Pushforward, IdentityTransform) {
  auto v = gen::D(P("x^2"));
  EXPECT_TRUE(same(pushforward(PointTransform::identity(), v), v));
}

TEST(Pushforward, CompositionWithInverseIsIdentity) {
  auto pt = elementary::scale_u(P("c2")).after(elementary::gauge_x(P("psi(x)")));
  auto round = pt.inverse().after(pt);
  EXPECT_TRUE(same(round.T(), P("t")));
  EXPECT_TRUE(same(round.X(), P("x")));
  EXPECT_TRUE(same(round.U(), P("u")));
}
