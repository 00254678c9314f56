#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wavegc/expr/expr.hpp"

namespace wavegc {

enum class Verdict { Zero, Nonzero, Undecided };

const char* to_string(Verdict v);

struct ZeroTestConfig {
  int samples = 32;
  long bound = 1000;
  std::uint64_t seed = 20240601;
  int retry_budget = 400;
};

struct ZeroTestResult {
  Verdict verdict = Verdict::Undecided;
  int samples_taken = 0;
  int singular_retries = 0;
  std::vector<std::string> log;  // sample points, first entries only
  std::string witness;           // point of the first nonzero evaluation
};

// Process-wide defaults; set once before any worker starts.
void set_zero_test_config(const ZeroTestConfig& cfg);
const ZeroTestConfig& zero_test_config();

ZeroTestResult zero_test(const Expr& e, const ZeroTestConfig& cfg = zero_test_config());
Verdict is_zero(const Expr& e);

}  // namespace wavegc
