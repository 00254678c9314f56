// Runs the ten acceptance criteria and prints one line each.
#include <CLI11.hpp>
#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <set>

#include "wavegc/classif/campaigns.hpp"

using namespace wavegc;

namespace {

struct Criterion {
  int number;
  std::string title;
  double budget_seconds;
  std::function<VerificationReport()> run;
  int catalog_records = -1;  // required count of catalog records, when positive
};

std::string first_problem(const VerificationReport& r) {
  for (const auto& rec : r.records)
    for (const auto& c : rec.checks)
      if (c.outcome != Outcome::Pass) {
        std::string d = c.detail.size() > 160 ? c.detail.substr(0, 160) + "..." : c.detail;
        return rec.campaign + "/" + rec.id + " " + c.name + ": " + d;
      }
  return {};
}

int count_checks(const VerificationReport& r) {
  int n = 0;
  for (const auto& rec : r.records) n += static_cast<int>(rec.checks.size());
  return n;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria"};
  CampaignOptions o;
  std::set<int> only;
  bool verbose = false;
  app.add_option("--seed", o.seed);
  app.add_option("--samples", o.samples)->check(CLI::PositiveNumber);
  app.add_option("--threads", o.threads)->check(CLI::PositiveNumber);
  app.add_option("--only", only, "criterion numbers to run")->check(CLI::Range(1, 10));
  app.add_flag("-v,--verbose", verbose, "list every non-passing check");
  CLI11_PARSE(app, argc, argv);

  const std::vector<std::string> lists{"L8.1", "L8.3", "C9.1"};
  std::vector<Criterion> criteria{
      {1, "commutator table", 5, [&] { return verify_equivalence_algebra(o); }},
      {2, "megaideals and automorphisms", 5, [] { return verify_megaideals(); }},
      {3, "determining system", 5, [] { return verify_determining_system(); }},
      {4, "kernel", 1, [] { return verify_kernel(); }},
      {5, "classification table", 600, [&] { return verify_catalog(o, {"table"}); }, 22},
      {6, "subalgebra lists and reductions", 60,
       [&] {
         auto r = verify_catalog(o, lists);
         r.append(verify_subalgebra_lists(o));
         r.append(verify_reductions());
         return r;
       },
       10},
      {7, "equivalence group", 30, [&] { return verify_equivalence_group(o); }},
      {8, "adjoint actions", 10, [] { return verify_adjoint_actions(); }},
      {9, "potential system link", 5, [] { return verify_potential_link(); }},
      {10, "property suites", 120, [&] { return verify_properties(o); }},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    if (!only.empty() && !only.count(c.number)) continue;
    auto start = std::chrono::steady_clock::now();
    VerificationReport r = c.run();
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    std::string problem;
    if (r.outcome() != Outcome::Pass || r.undecided_checks() > 0) problem = first_problem(r);
    if (c.catalog_records > 0) {
      int seen = 0;
      for (const auto& rec : r.records) seen += rec.campaign == "catalog";
      if (seen != c.catalog_records && problem.empty())
        problem = std::to_string(seen) + " catalog records, expected " + std::to_string(c.catalog_records);
    }
    if (secs > c.budget_seconds && problem.empty()) problem = "over the time budget";
    bool pass = problem.empty();
    failed += !pass;

    std::cout << "criterion " << std::setw(2) << c.number << " " << (pass ? "PASS" : "FAIL") << "  " << c.title
              << " (" << count_checks(r) << " checks, " << r.count(Outcome::Fail) << " failing records, "
              << r.undecided_checks() << " undecided; " << std::fixed << std::setprecision(2) << secs << " s of "
              << std::setprecision(0) << c.budget_seconds << " s)";
    if (!pass) std::cout << "  " << problem;
    std::cout << std::endl;
    if (verbose && !pass) {
      for (const auto& rec : r.records)
        for (const auto& ch : rec.checks)
          if (ch.outcome != Outcome::Pass)
            std::cout << "    " << rec.campaign << "/" << rec.id << " " << ch.name << ": " << to_string(ch.outcome)
                      << "\n";
    }
  }
  std::cout << (failed == 0 ? "all criteria pass" : std::to_string(failed) + " criteria failing") << "\n";
  return failed == 0 ? 0 : 1;
}
