#include <gtest/gtest.h>

#include <random>

#include "wavegc/expr/evaluate.hpp"
#include "wavegc/expr/parse.hpp"
#include "wavegc/liealg/automorphism.hpp"
#include "wavegc/vecfield/equivalence.hpp"

using namespace wavegc;
namespace gen = wavegc::generator;

namespace {

Expr P(const char* s) { return parse(s); }

Expr entries(const char* s) {
  SymbolTable table = SymbolTable::standard();
  for (int i = 1; i <= 6; ++i)
    for (int j = i; j <= 6; ++j) table.add(automorphism_entry(i, j));
  return parse(s, table);
}

QVec q(std::initializer_list<long> xs) {
  QVec v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

LieAlgebra m_algebra() {
  auto r = close_or_fail({"G(1)", "F1", "F2", "Pt", "Dt"}, {gen::G(1), gen::F1(), gen::F2(), gen::Pt(), gen::Dt()});
  EXPECT_TRUE(r.closed) << r.witness;
  return r.algebra;
}

LieAlgebra sl2() {
  // h, e, f
  return LieAlgebra::import_table("1 2 2 2\n1 3 3 -2\n2 3 1 1\n", {"h", "e", "f"});
}

}  // namespace

TEST(Linear, RrefAndNullspace) {
  QMat m{q({1, 2, 3}), q({2, 4, 6}), q({0, 1, 1})};
  EXPECT_EQ(rank(m), 2);
  auto ns = nullspace(m, 3);
  ASSERT_EQ(ns.size(), 1u);
  EXPECT_EQ(ns[0], q({-1, -1, 1}));
}

TEST(Linear, SubspaceSumAndIntersection) {
  auto a = Subspace::coordinate(3, {0, 1});
  auto b = Subspace::span(3, {q({0, 1, 1}), q({0, 0, 1})});
  EXPECT_EQ((a + b).dim(), 3);
  auto c = a.intersect(b);
  EXPECT_EQ(c.dim(), 1);
  EXPECT_TRUE(c.contains(q({0, 1, 0})));
}

TEST(Closure, TranslationAndGauges) {
  auto r = close_or_fail({"Pt", "F1", "G(1)"}, {gen::Pt(), gen::F1(), gen::G(1)});
  ASSERT_TRUE(r.closed) << r.witness;
  EXPECT_EQ(r.algebra.structure(0, 1), q({0, 0, 1}));
  EXPECT_EQ(derived_series(r.algebra).back().dim(), 0);
  EXPECT_EQ(lower_central_series(r.algebra).back().dim(), 0);
}

TEST(Closure, KernelIsHeisenberg) {
  auto r = close_or_fail({"dt", "du", "tdu"}, {parse_field("1@t", Chart::Base), parse_field("1@u", Chart::Base),
                                                parse_field("t@u", Chart::Base)});
  ASSERT_TRUE(r.closed);
  EXPECT_EQ(r.algebra.structure(0, 2), q({0, 1, 0}));
  EXPECT_EQ(center(r.algebra), Subspace::coordinate(3, {1}));
  EXPECT_EQ(radical(r.algebra).dim(), 3);
}

TEST(Closure, BaseProjectionsCommute) {
  auto r = close_or_fail({"Dt", "D(1)"}, {gen::Dt().project(Chart::Base), gen::D(1).project(Chart::Base)});
  ASSERT_TRUE(r.closed);
  EXPECT_EQ(center(r.algebra).dim(), 2);
}

TEST(Closure, EscapingBracketIsNamed) {
  auto r = close_or_fail({"dt", "t2du"}, {parse_field("1@t", Chart::Base), parse_field("t^2@u", Chart::Base)});
  EXPECT_FALSE(r.closed);
  EXPECT_NE(r.witness.find("[dt, t2du]"), std::string::npos);
}

TEST(Closure, DependentInputIsPruned) {
  auto r = close_or_fail({"a", "b", "c"}, {parse_field("1@t", Chart::Base), parse_field("x@u", Chart::Base),
                                           parse_field("2@t", Chart::Base)});
  ASSERT_TRUE(r.closed);
  EXPECT_EQ(r.pruned, std::vector<int>{2});
  EXPECT_EQ(r.algebra.dim(), 2);
}

TEST(Structure, MegaidealChain) {
  LieAlgebra m = m_algebra();
  auto ds = derived_series(m);
  ASSERT_GE(ds.size(), 3u);
  EXPECT_EQ(ds[1], Subspace::coordinate(5, {0, 1, 2, 3}));
  EXPECT_EQ(ds[2], Subspace::coordinate(5, {0, 1}));
  EXPECT_EQ(center(m), Subspace::coordinate(5, {0}));
  EXPECT_EQ(centralizer(m, ds[2]), Subspace::coordinate(5, {0, 1, 2}));
  EXPECT_EQ(radical(m).dim(), 5);
  for (const auto& s : ds) EXPECT_TRUE(is_ideal(m, s));
}

TEST(Structure, SemisimpleFixtureHasNoRadical) {
  LieAlgebra s = sl2();
  EXPECT_EQ(radical(s).dim(), 0);
  EXPECT_EQ(center(s).dim(), 0);
  EXPECT_EQ(derived_series(s).size(), 1u);
}

TEST(Structure, AbelianCenterIsEverything) {
  LieAlgebra ab({"a", "b"}, {});
  EXPECT_EQ(center(ab).dim(), 2);
}

TEST(Table, RoundTripAndJacobi) {
  LieAlgebra m = m_algebra();
  LieAlgebra back = LieAlgebra::import_table(m.export_table(), m.labels());
  EXPECT_EQ(back.export_table(), m.export_table());
  EXPECT_THROW(LieAlgebra::import_table("1 2 1 1\n1 3 2 1\n", {"a", "b", "c"}), PresentationError);
  EXPECT_THROW(LieAlgebra::import_table("1 2 4 1\n", {"a", "b", "c"}), PresentationError);
}

TEST(Automorphism, FlagOfTheFiveDimensionalAlgebra) {
  LieAlgebra m = m_algebra();
  std::vector<Subspace> flag;
  for (int k = 1; k <= 5; ++k) {
    std::vector<int> idx;
    for (int i = 0; i < k; ++i) idx.push_back(i);
    flag.push_back(Subspace::coordinate(5, idx));
  }
  auto fam = flag_automorphism_solve(m, flag);
  EXPECT_TRUE(fam.unresolved.empty());
  for (const char* rel : {"a55 - 1", "a34", "a24 - a44*a35", "a14 - a44*a25 + a45*a24"})
    EXPECT_TRUE(fam.reduce(entries(rel)).is_zero()) << rel << " -> " << fam.reduce(entries(rel)).str();
  EXPECT_NE(std::find(fam.invariant_subspaces.begin(), fam.invariant_subspaces.end(),
                      Subspace::coordinate(5, {0, 1, 3})),
            fam.invariant_subspaces.end());

  // Instantiations preserve the structure constants.
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    Bindings b;
    for (Symbol s : fam.free) b.emplace_back(Expr(s), Expr(random_rational(rng, 9, true)));
    QMat M(5, QVec(5));
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j) ASSERT_TRUE(substitute_plain(fam.matrix[i][j], b).as_rational(M[i][j]));
    auto apply = [&](const QVec& v) {
      QVec r(5, Rational(0));
      for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) r[i] += M[i][j] * v[j];
      return r;
    };
    for (int i = 0; i < 5; ++i)
      for (int j = i + 1; j < 5; ++j)
        EXPECT_EQ(apply(m.bracket(m.unit(i), m.unit(j))), m.bracket(apply(m.unit(i)), apply(m.unit(j))));
  }
}

TEST(Automorphism, AbelianFlagForcesNothing) {
  LieAlgebra ab({"a", "b"}, {});
  auto fam = flag_automorphism_solve(ab, {Subspace::coordinate(2, {0}), Subspace::whole(2)});
  EXPECT_TRUE(fam.solved.empty());
  EXPECT_TRUE(fam.unresolved.empty());
  EXPECT_EQ(fam.free.size(), 3u);
}
