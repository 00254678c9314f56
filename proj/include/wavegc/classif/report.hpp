#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wavegc/expr/zero_test.hpp"
#include "wavegc/vecfield/vector_field.hpp"

namespace wavegc {

enum class Outcome { Pass, Fail, Undecided };

const char* to_string(Outcome o);
Outcome from_verdict(Verdict v);
// Fail dominates Undecided, which dominates Pass.
Outcome combine(Outcome a, Outcome b);

struct Check {
  std::string name;
  Outcome outcome = Outcome::Pass;
  std::string detail;  // residual or witness when not passing; short note otherwise
};

struct CaseRecord {
  std::string campaign;
  std::string id;
  std::string title;
  std::string f, g, extension;  // catalog records only
  std::vector<Check> checks;
  int expected_dim = -1;               // -1 when no dimension is claimed
  std::vector<int> ansatz_dims;        // one per parameter sample, "within ansatz"
  std::vector<std::string> samples;
  double seconds = 0;

  Outcome outcome() const;
  void add(Check c) { checks.push_back(std::move(c)); }
  void expect(const std::string& name, bool ok, const std::string& detail = {});
};

struct VerificationReport {
  std::vector<CaseRecord> records;

  Outcome outcome() const;
  int count(Outcome o) const;
  int undecided_checks() const;
  void append(const VerificationReport& other);
  void append(CaseRecord r) { records.push_back(std::move(r)); }
};

// Residual checks. Structural zero first, then the probabilistic test.
Check zero_check(const std::string& name, const Expr& e);
Check field_check(const std::string& name, const VectorField& got, const VectorField& want);

struct ReportMeta {
  std::string command;
  std::uint64_t seed = 0;
  int samples = 0;
  int zero_test_samples = 0;
  int threads = 1;
  bool timing = false;  // wall times make the document run-dependent
  int catalog_entries = -1;  // asserted in the footer when >= 0
};

inline constexpr const char* kReportSchema = "wavegc-report/1";

std::string report_json(const VerificationReport& r, const ReportMeta& meta);
// Human-readable table, one line per record.
std::string report_text(const VerificationReport& r, const ReportMeta& meta);

}  // namespace wavegc
