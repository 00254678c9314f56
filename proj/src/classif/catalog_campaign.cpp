#include <chrono>
#include <set>

#include "wavegc/classif/campaigns.hpp"
#include "wavegc/classif/pool.hpp"
#include "wavegc/expr/names.hpp"
#include "wavegc/liealg/lie_algebra.hpp"

namespace wavegc {

namespace {

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string join(const std::vector<std::string>& xs, const char* sep) {
  std::string out;
  for (const auto& x : xs) out += (out.empty() ? "" : sep) + x;
  return out;
}

VectorField instantiate(const VectorField& v, const Bindings& b) {
  return v.map([&](const Expr& e) { return normalize(substitute_plain(e, b)); });
}

std::string title_of(const ClassificationCase& c) {
  if (c.list == "table") return "classification table, case " + c.id;
  if (c.list == "L8.1") return "subclass list with mu(x), case " + c.id.substr(c.id.find(':') + 1);
  if (c.list == "L8.3") return "subclass list with theta(x), case " + c.id.substr(c.id.find(':') + 1);
  return "two-operator extensions, case " + c.id.substr(c.id.find(':') + 1);
}

void check_sample(const ClassificationCase& c, const ParameterSample& s, const CampaignOptions& o, CaseRecord& rec) {
  std::string tag = "[" + sample_str(s) + "]";
  Bindings b = sample_bindings(s);
  Expr f = normalize(substitute_plain(c.f, b)), g = normalize(substitute_plain(c.g, b));
  std::vector<VectorField> fields = kernel_fields();
  std::vector<std::string> labels{"dt", "du", "tdu"};
  for (std::size_t i = 0; i < c.generators.size(); ++i) {
    fields.push_back(instantiate(c.generators[i], b));
    labels.push_back("X" + std::to_string(i + 1));
  }

  ClosureResult cl = close_or_fail(labels, fields);
  if (!cl.closed) {
    rec.expect("closure " + tag, false, cl.witness);
  } else {
    rec.expect("closure " + tag, cl.pruned.empty() && cl.algebra.dim() == c.expected_dim,
               "closed with dimension " + std::to_string(cl.algebra.dim()));
  }

  try {
    AnsatzSolution sol = solve_within_ansatz(f, g, o.basis);
    rec.ansatz_dims.push_back(sol.dimension);
    rec.expect("ansatz dimension " + tag, sol.dimension == c.expected_dim,
               "within ansatz " + std::to_string(sol.dimension) + ", expected " + std::to_string(c.expected_dim));
    Outcome solved = Outcome::Pass;
    for (const auto& sc : sol.checks) solved = combine(solved, from_verdict(sc.verdict));
    rec.add({"ansatz solutions are symmetries " + tag, solved, ""});
    for (std::size_t i = 3; i < fields.size(); ++i) {
      bool in_span = field_coordinates(sol.basis, fields[i]).has_value();
      rec.expect("generator in ansatz span " + tag, in_span, in_span ? "" : fields[i].str());
    }
  } catch (const std::exception& e) {
    rec.ansatz_dims.push_back(-1);
    rec.expect("ansatz dimension " + tag, false, e.what());
  }
}

}  // namespace

ClassificationCase corrupted(const ClassificationCase& c) {
  ClassificationCase bad = c;
  bad.id = c.id + "-corrupted";
  // Negating a single-term field would leave it a symmetry, so pick one with two terms.
  for (std::size_t i = 0; i < bad.generators.size(); ++i) {
    auto coeffs = bad.generators[i].coeffs();
    int nonzero = 0;
    for (const auto& e : coeffs) nonzero += !e.is_zero();
    if (nonzero < 2) continue;
    for (std::size_t k = coeffs.size(); k-- > 0;) {
      if (coeffs[k].is_zero()) continue;
      coeffs[k] = -coeffs[k];
      bad.generators[i] = VectorField(Chart::Base, coeffs);
      bad.generator_text[i] = bad.generators[i].str();
      return bad;
    }
  }
  return bad;
}

CaseRecord verify_case(const ClassificationCase& c, const CampaignOptions& o) {
  auto start = std::chrono::steady_clock::now();
  CaseRecord rec;
  rec.campaign = "catalog";
  rec.id = c.id;
  rec.title = title_of(c);
  rec.f = c.f_text;
  rec.g = c.g_text;
  rec.extension = join(c.generator_text, ", ");
  rec.expected_dim = c.expected_dim;

  Outcome kernel = Outcome::Pass;
  for (const auto& k : kernel_fields()) kernel = combine(kernel, from_verdict(check_symmetry(c.f, c.g, k).verdict));
  rec.add({"kernel", kernel, ""});
  for (std::size_t i = 0; i < c.generators.size(); ++i) {
    SymmetryCheck sc = check_symmetry(c.f, c.g, c.generators[i]);
    Check chk{"symmetry " + c.generator_text[i], from_verdict(sc.verdict), ""};
    if (chk.outcome != Outcome::Pass) chk.detail = "residual " + sc.residual.str();
    rec.add(chk);
  }
  if (!numerator(diff(c.f, names().u_x)).is_zero()) {
    for (std::size_t i = 0; i < c.generators.size(); ++i) {
      std::string v = simplified_system_violation(c.generators[i]);
      rec.expect("simplified system " + c.generator_text[i], v.empty(), v.empty() ? "" : "violates " + v);
    }
  }

  std::mt19937_64 rng(o.seed ^ fnv1a(c.id));
  try {
    for (const auto& s : sample_parameters(c, rng, o.samples)) {
      rec.samples.push_back(sample_str(s));
      check_sample(c, s, o, rec);
    }
  } catch (const std::exception& e) {
    rec.expect("parameter sampling", false, e.what());
  }
  rec.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rec;
}

namespace {

CaseRecord catalog_scan() {
  CaseRecord rec;
  rec.campaign = "catalog-scan";
  rec.id = "catalog";
  rec.title = "catalog completeness and generator scan";
  std::set<std::string> ids;
  for (const auto& c : builtin_catalog()) ids.insert(c.id);
  std::string missing;
  for (int i = 1; i <= 22; ++i)
    if (!ids.count(std::to_string(i))) missing += " " + std::to_string(i);
  rec.expect("table ids 1-22 present", missing.empty(), missing.empty() ? "" : "missing" + missing);
  rec.expect("ids unique", ids.size() == builtin_catalog().size());

  // Quadratic tau marks the cases not tied to a subalgebra of the equivalence algebra.
  const auto& n = names();
  std::set<std::string> quadratic;
  for (const auto& c : builtin_catalog()) {
    if (c.list != "table") continue;
    for (const auto& v : c.generators)
      if (!numerator(diff(v.coeff(0), n.t, 2)).is_zero()) quadratic.insert(c.id);
  }
  std::string got = join(std::vector<std::string>(quadratic.begin(), quadratic.end()), ",");
  rec.expect("quadratic tau only in cases 6,18,19,22", quadratic == std::set<std::string>{"6", "18", "19", "22"}, got);

  const ClassificationCase* c22 = find_case("22");
  rec.expect("case 22 has dimension 7", c22 && c22->expected_dim == 7);
  return rec;
}

}  // namespace

VerificationReport verify_catalog(const CampaignOptions& o, const std::vector<std::string>& lists) {
  std::vector<const ClassificationCase*> chosen;
  for (const auto& c : builtin_catalog())
    if (lists.empty() || std::find(lists.begin(), lists.end(), c.list) != lists.end()) chosen.push_back(&c);
  std::vector<std::function<CaseRecord()>> tasks;
  for (const auto* c : chosen) tasks.push_back([c, &o] { return verify_case(*c, o); });

  // Negative control: a sign flip in one generator must be caught.
  const ClassificationCase* control = find_case("18");
  tasks.push_back([control, &o] {
    CaseRecord bad = verify_case(corrupted(*control), o);
    CaseRecord rec;
    rec.campaign = "control";
    rec.id = bad.id;
    rec.title = "corrupted generator is rejected";
    bool caught = false;
    std::string detail;
    for (const auto& c : bad.checks)
      if (c.name.rfind("symmetry ", 0) == 0 && c.outcome == Outcome::Fail) {
        caught = true;
        detail = c.name + ": " + c.detail;
      }
    rec.expect("nonzero residual detected", caught, detail);
    rec.seconds = bad.seconds;
    return rec;
  });

  VerificationReport r;
  for (auto& rec : run_pool(tasks, o.threads)) r.append(std::move(rec));
  r.append(catalog_scan());
  return r;
}

}  // namespace wavegc
