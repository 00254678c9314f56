#include <gtest/gtest.h>

#include <json.hpp>
#include <set>

#include "wavegc/classif/campaigns.hpp"
#include "wavegc/classif/pool.hpp"
#include "wavegc/expr/names.hpp"

using namespace wavegc;

namespace {

bool all_pass(const VerificationReport& r) { return r.outcome() == Outcome::Pass && r.undecided_checks() == 0; }

std::string failures(const VerificationReport& r) {
  std::string out;
  for (const auto& rec : r.records)
    for (const auto& c : rec.checks)
      if (c.outcome != Outcome::Pass) out += rec.id + "/" + c.name + ": " + c.detail + "\n";
  return out;
}

}  // namespace

TEST(Catalog, IdsAndCounts) {
  const auto& cat = builtin_catalog();
  EXPECT_EQ(cat.size(), 32u);
  std::set<std::string> ids;
  for (const auto& c : cat) ids.insert(c.id);
  EXPECT_EQ(ids.size(), cat.size());
  for (int i = 1; i <= 22; ++i) EXPECT_TRUE(ids.count(std::to_string(i))) << i;
  const ClassificationCase* c22 = find_case("22");
  ASSERT_NE(c22, nullptr);
  EXPECT_EQ(c22->expected_dim, 7);
  EXPECT_EQ(c22->generators.size(), 4u);
  EXPECT_EQ(find_case("L8.1:3")->generator_text, (std::vector<std::string>{"t^2@t + t*u@u", "2*t@t + u@u", "1@x",
                                                                            "2*x@x + u@u"}));
}

TEST(Catalog, SamplingRespectsConstraints) {
  const auto& n = names();
  std::mt19937_64 rng(3);
  for (const char* id : {"7", "8", "14", "15", "20"}) {
    const ClassificationCase* c = find_case(id);
    for (const auto& s : sample_parameters(*c, rng, 8)) {
      for (const auto& con : c->constraints) EXPECT_TRUE(con.holds(s)) << id << " " << con.text;
      for (const auto& [sym, v] : s) {
        if (sym == n.delta) {
          EXPECT_TRUE(v == 1 || v == -1);
        }
        if (sym == n.eps) {
          EXPECT_TRUE(v == 0 || v == 1);
        }
      }
    }
  }
}

TEST(Catalog, SignParametersCycle) {
  std::mt19937_64 rng(1);
  auto s = sample_parameters(*find_case("22"), rng, 2);
  EXPECT_EQ(sample_str(s[0]), "delta=1");
  EXPECT_EQ(sample_str(s[1]), "delta=-1");
}

TEST(VerifyCase, Case18PassesWithDimensionSix) {
  CaseRecord r = verify_case(*find_case("18"));
  EXPECT_EQ(r.outcome(), Outcome::Pass) << failures(VerificationReport{{r}});
  EXPECT_EQ(r.ansatz_dims, (std::vector<int>{6, 6, 6}));
}

TEST(VerifyCase, FormalFunctionsThroughSimilarityVariable) {
  CaseRecord r = verify_case(*find_case("2"));
  EXPECT_EQ(r.outcome(), Outcome::Pass) << failures(VerificationReport{{r}});
}

TEST(VerifyCase, CorruptedGeneratorFails) {
  ClassificationCase bad = corrupted(*find_case("18"));
  EXPECT_NE(bad.generator_text, find_case("18")->generator_text);
  EXPECT_EQ(verify_case(bad).outcome(), Outcome::Fail);
}

TEST(Campaigns, KernelAndDeterminingSystem) {
  auto r = verify_kernel();
  r.append(verify_determining_system());
  EXPECT_TRUE(all_pass(r)) << failures(r);
}

TEST(Campaigns, PotentialLink) {
  auto r = verify_potential_link();
  EXPECT_TRUE(all_pass(r)) << failures(r);
}

TEST(Campaigns, AlgebraStructure) {
  auto r = verify_equivalence_algebra();
  r.append(verify_megaideals());
  r.append(verify_adjoint_actions());
  r.append(verify_subalgebra_lists());
  EXPECT_TRUE(all_pass(r)) << failures(r);
}

TEST(Campaigns, EquivalenceGroup) {
  auto r = verify_equivalence_group();
  EXPECT_TRUE(all_pass(r)) << failures(r);
}

TEST(Campaigns, ReductionsAsPrinted) {
  auto r = verify_reductions();
  for (const auto& rec : r.records) {
    if (rec.id == "c") {
      // the printed map x~ = exp(x) leaves g~ = 2 delta/u_x; exp(-x) works
      for (const auto& c : rec.checks) {
        if (c.name == "printed map x~ = exp(x)") EXPECT_EQ(c.outcome, Outcome::Fail);
        else EXPECT_EQ(c.outcome, Outcome::Pass) << c.name << ": " << c.detail;
      }
    } else {
      EXPECT_EQ(rec.outcome(), Outcome::Pass) << failures(VerificationReport{{rec}});
    }
  }
}

TEST(Campaigns, SmallPropertyRun) {
  auto r = verify_properties({}, {10, 5, 3, 10});
  EXPECT_TRUE(all_pass(r)) << failures(r);
}

TEST(Pool, ResultsKeepTaskOrder) {
  std::vector<std::function<int()>> tasks;
  for (int i = 0; i < 20; ++i) tasks.push_back([i] { return i * i; });
  auto one = run_pool(tasks, 1), four = run_pool(tasks, 4);
  EXPECT_EQ(one, four);
  EXPECT_EQ(four[7], 49);
}

TEST(Pool, RethrowsFirstError) {
  std::vector<std::function<int()>> tasks{[] { return 1; }, [] () -> int { throw std::runtime_error("boom"); }};
  EXPECT_THROW(run_pool(tasks, 2), std::runtime_error);
}

TEST(Report, SchemaAndFooter) {
  CampaignOptions o;
  o.samples = 1;
  auto r = verify_catalog(o, {"C9.1"});
  ReportMeta meta;
  meta.command = "verify subalgebras";
  meta.seed = o.seed;
  meta.catalog_entries = 2;
  auto doc = nlohmann::json::parse(report_json(r, meta));
  EXPECT_EQ(doc["schema"], kReportSchema);
  EXPECT_EQ(doc["footer"]["catalog_entries_verified"], 2);
  EXPECT_EQ(doc["footer"]["catalog_complete"], true);
  EXPECT_FALSE(doc["records"][0].contains("seconds"));
}

TEST(Report, ThreadCountDoesNotChangeTheReport) {
  CampaignOptions a, b;
  a.samples = b.samples = 1;
  b.threads = 3;
  ReportMeta meta;
  meta.command = "verify";
  auto ra = report_json(verify_catalog(a, {"L8.1", "L8.3"}), meta);
  auto rb = report_json(verify_catalog(b, {"L8.1", "L8.3"}), meta);
  EXPECT_EQ(ra, rb);
}
