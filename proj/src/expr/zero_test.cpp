#include "wavegc/expr/zero_test.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <random>

#include "wavegc/expr/calculus.hpp"
#include "wavegc/expr/evaluate.hpp"

namespace wavegc {

namespace {

ZeroTestConfig& global_config() {
  static ZeroTestConfig cfg;
  return cfg;
}

std::string describe(const Environment& env) {
  std::string out;
  for (const auto& [si, v] : env.symbols) {
    if (!out.empty()) out += ", ";
    out += si->name + "=" + v.str();
  }
  return out;
}

void collect_applications(const Expr& e, std::vector<Expr>& out) {
  if (e.kind() == Kind::Func) {
    if (std::find(out.begin(), out.end(), e) == out.end()) out.push_back(e);
    return;
  }
  if (e.kind() == Kind::Const || e.kind() == Kind::Sym) return;
  for (const auto& op : e.ops()) collect_applications(op, out);
}

// Applications of the same partial whose arguments agree as rational functions, e.g. f(x, a/b) and
// f(x, 2a/(2b)), get one representative. Returns e unchanged when nothing merges.
Expr merge_applications(const Expr& e) {
  std::vector<Expr> apps;
  collect_applications(e, apps);
  Bindings merge;
  for (std::size_t i = 0; i < apps.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) {
      const Expr& a = apps[i];
      const Expr& b = apps[j];
      if (!(a.function() == b.function()) || a.deriv() != b.deriv()) continue;
      bool same = true;
      for (std::size_t k = 0; same && k < a.ops().size(); ++k)
        same = numerator(a.ops()[k] - b.ops()[k]).is_zero();
      if (same) {
        merge.emplace_back(a, b);
        break;
      }
    }
  if (merge.empty()) return e;
  return normalize(substitute_plain(e, merge));
}

}  // namespace

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Zero: return "zero";
    case Verdict::Nonzero: return "nonzero";
    case Verdict::Undecided: return "undecided";
  }
  return "?";
}

void set_zero_test_config(const ZeroTestConfig& cfg) { global_config() = cfg; }
const ZeroTestConfig& zero_test_config() { return global_config(); }

ZeroTestResult zero_test(const Expr& e, const ZeroTestConfig& cfg) {
  ZeroTestResult res;
  Expr n = normalize(e);
  if (n.is_zero() || numerator(n).is_zero()) {
    res.verdict = Verdict::Zero;
    return res;
  }
  if (!n.free_functions().empty()) {
    Expr merged = merge_applications(n);
    if (numerator(merged).is_zero()) {
      res.verdict = Verdict::Zero;
      return res;
    }
  }
  std::mt19937_64 rng(cfg.seed ^ n.hash());
  while (res.samples_taken < cfg.samples) {
    Environment env;
    sample_environment(n, rng, cfg.bound, env);
    Value v;
    try {
      v = evaluate(n, env);
    } catch (const SingularPoint&) {
      if (++res.singular_retries > cfg.retry_budget) {
        res.log.push_back("retry budget exhausted at singular points");
        break;
      }
      continue;
    } catch (const DivisionByZero&) {
      if (++res.singular_retries > cfg.retry_budget) {
        res.log.push_back("retry budget exhausted at singular points");
        break;
      }
      continue;
    }
    ++res.samples_taken;
    if (res.log.size() < 4) res.log.push_back(describe(env) + " -> " + v.str());
    if (!v.is_zero()) {
      res.verdict = Verdict::Nonzero;
      res.witness = describe(env);
      return res;
    }
  }
  res.verdict = Verdict::Undecided;
  return res;
}

Verdict is_zero(const Expr& e) { return zero_test(e).verdict; }

}  // namespace wavegc
