#include "wavegc/cli/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <functional>
#include <ostream>

#include "wavegc/classif/campaigns.hpp"
#include "wavegc/expr/names.hpp"
#include "wavegc/expr/parse.hpp"
#include "wavegc/vecfield/equivalence.hpp"
#include "wavegc/vecfield/prolong.hpp"
#include "wavegc/vecfield/transform.hpp"

namespace wavegc::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Settings {
  std::uint64_t seed = CampaignOptions{}.seed;
  int samples = CampaignOptions{}.samples;
  int zero_test_samples = ZeroTestConfig{}.samples;
  int jet_order = 2;
  int threads = 1;
  std::string report;
  std::string format = "text";
  bool timing = false;
  std::vector<std::string> ansatz_tau, ansatz_xi, ansatz_eta;
};

// Key-value file in the TOML subset CLI11 reads: `key = value`, strings quoted, lists in brackets.
std::vector<CLI::ConfigItem> read_key_values(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  return CLI::ConfigTOML().from_file(path);
}

std::string item_key(const CLI::ConfigItem& it) {
  std::string key;
  for (const auto& p : it.parents) key += p + ".";
  return key + it.name;
}

// f and g are functions of x and u_x; parameters are allowed.
Expr parse_element(const std::string& text, const std::string& what) {
  Expr e = parse(text);
  const auto& n = names();
  for (const SymbolInfo* s : e.free_symbols()) {
    if (s == n.x.ptr() || s == n.u_x.ptr() || s->kind == SymbolKind::Parameter) continue;
    throw UsageError(what + " may depend on x, u_x and parameters only, not " + s->name);
  }
  return e;
}

// Coefficients of the prolongation up to `order`. Beyond second order they come from the
// characteristic: eta^J = D_J(eta - tau u_t - xi u_x) + tau u_Jt + xi u_Jx.
void print_prolongation(std::ostream& out, const VectorField& q, int order) {
  ProlongedField p = prolong2(q);
  out << "field: " << p.base.str() << "\n"
      << "eta_t: " << p.eta_t.str() << "\n"
      << "eta_x: " << p.eta_x.str() << "\n"
      << "eta_tt: " << p.eta_tt.str() << "\n"
      << "eta_tx: " << p.eta_tx.str() << "\n"
      << "eta_xx: " << p.eta_xx.str() << "\n";
  const auto& n = names();
  Expr tau = q.coeff(0), xi = q.coeff(1);
  Expr Q = q.coeff(2) - tau * Expr(n.u_t) - xi * Expr(n.u_x);
  for (int k = 3; k <= order; ++k) {
    for (int nt = k; nt >= 0; --nt) {
      int nx = k - nt;
      Expr d = Q;
      for (int i = 0; i < nt; ++i) d = total_derivative(d, Direction::T, order + 1);
      for (int i = 0; i < nx; ++i) d = total_derivative(d, Direction::X, order + 1);
      d = d + tau * Expr(Symbol::jet(n.u, nt + 1, nx)) + xi * Expr(Symbol::jet(n.u, nt, nx + 1));
      out << "eta_" << std::string(nt, 't') << std::string(nx, 'x') << ": " << d.str() << "\n";
    }
  }
}

std::vector<Expr> parse_list(const std::vector<std::string>& xs) {
  std::vector<Expr> out;
  for (const auto& s : xs) out.push_back(parse(s));
  return out;
}

AnsatzBasis basis_from(const Settings& s) {
  AnsatzBasis b = AnsatzBasis::standard();
  if (!s.ansatz_tau.empty()) b.tau = parse_list(s.ansatz_tau);
  if (!s.ansatz_xi.empty()) b.xi = parse_list(s.ansatz_xi);
  if (!s.ansatz_eta.empty()) b.eta = parse_list(s.ansatz_eta);
  return b;
}

AnsatzBasis basis_file(const std::string& path) {
  AnsatzBasis b = AnsatzBasis::standard();
  for (const auto& it : read_key_values(path)) {
    std::string key = item_key(it);
    if (key == "tau") b.tau = parse_list(it.inputs);
    else if (key == "xi") b.xi = parse_list(it.inputs);
    else if (key == "eta") b.eta = parse_list(it.inputs);
    else throw UsageError(path + ": unknown key " + key);
  }
  return b;
}

EquivalenceParams params_file(const std::string& path) {
  EquivalenceParams p;
  for (const auto& it : read_key_values(path)) {
    std::string key = item_key(it);
    if (it.inputs.size() != 1) throw UsageError(path + ": " + key + " needs one value");
    Expr v = parse(it.inputs[0]);
    if (key == "c0") p.c0 = v;
    else if (key == "c1") p.c1 = v;
    else if (key == "c2") p.c2 = v;
    else if (key == "c3") p.c3 = v;
    else if (key == "c4") p.c4 = v;
    else if (key == "phi") p.phi = v;
    else if (key == "phi_inverse") p.phi_inverse = v;
    else if (key == "psi") p.psi = v;
    else throw UsageError(path + ": unknown key " + key);
  }
  if (p.c1.is_zero() || p.c2.is_zero()) throw UsageError(path + ": c1 and c2 must be nonzero");
  return p;
}

int exit_for(Verdict v) {
  switch (v) {
    case Verdict::Zero: return kPass;
    case Verdict::Nonzero: return kFail;
    default: return kUndecided;
  }
}

int exit_for(const VerificationReport& r) {
  if (r.outcome() == Outcome::Fail) return kFail;
  if (r.outcome() == Outcome::Undecided || r.undecided_checks() > 0) return kUndecided;
  return kPass;
}

const std::vector<std::string> kTargets{"table",   "algebra",     "adjoint", "reductions", "potential",
                                        "subalgebras", "group",   "detsys",  "kernel",     "properties",
                                        "all"};

VerificationReport run_target(const std::string& target, const CampaignOptions& o, int* catalog_entries) {
  VerificationReport r;
  auto catalog_size = [](const std::vector<std::string>& lists) {
    int n = 0;
    for (const auto& c : builtin_catalog())
      n += lists.empty() || std::find(lists.begin(), lists.end(), c.list) != lists.end();
    return n;
  };
  const std::vector<std::string> lists{"L8.1", "L8.3", "C9.1"};
  bool all = target == "all";
  if (all || target == "detsys") r.append(verify_determining_system());
  if (all || target == "detsys" || target == "kernel") r.append(verify_kernel());
  if (all || target == "algebra") {
    r.append(verify_equivalence_algebra(o));
    r.append(verify_megaideals());
  }
  if (all || target == "group") r.append(verify_equivalence_group(o));
  if (all || target == "adjoint") r.append(verify_adjoint_actions());
  if (all || target == "table") {
    r.append(verify_catalog(o));
    *catalog_entries = catalog_size({});
  }
  if (target == "subalgebras") {
    r.append(verify_catalog(o, lists));
    *catalog_entries = catalog_size(lists);
  }
  if (all || target == "subalgebras") r.append(verify_subalgebra_lists(o));
  if (all || target == "reductions") r.append(verify_reductions());
  if (all || target == "potential") r.append(verify_potential_link());
  if (all || target == "properties") r.append(verify_properties(o));
  return r;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Group classification checks for u_tt = f(x,u_x) u_xx + g(x,u_x)", "wavegc"};
  app.require_subcommand(1);
  Settings s;
  app.set_config("--config", "", "key = value settings file");
  app.allow_config_extras(CLI::config_extras_mode::error);
  app.add_option("--seed", s.seed, "sampling seed");
  app.add_option("--samples", s.samples, "parameter samples per catalog case")->check(CLI::PositiveNumber);
  app.add_option("--zero-test-samples", s.zero_test_samples, "evaluation points per zero test")
      ->check(CLI::PositiveNumber);
  app.add_option("--jet-order", s.jet_order, "order printed by prolong")
      ->check(CLI::Range(2, kDefaultJetOrder));
  app.add_option("--threads", s.threads, "worker threads for catalog checks")->check(CLI::PositiveNumber);
  app.add_option("--report", s.report, "write the report here instead of stdout");
  app.add_option("--format", s.format, "report format")->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--timing", s.timing, "include wall times in the report");
  app.add_option("--ansatz-tau", s.ansatz_tau, "basis functions for tau")->group("Ansatz");
  app.add_option("--ansatz-xi", s.ansatz_xi, "basis functions for xi")->group("Ansatz");
  app.add_option("--ansatz-eta", s.ansatz_eta, "basis functions for eta")->group("Ansatz");

  std::string v_text, w_text, q_text, f_text, g_text, basis_path, params_path, target;
  int expect_dim = -1;

  auto* bracket_cmd = app.add_subcommand("bracket", "Lie bracket of two fields on (t,x,u)");
  bracket_cmd->add_option("V", v_text)->required();
  bracket_cmd->add_option("W", w_text)->required();

  auto* prolong_cmd = app.add_subcommand("prolong", "second prolongation of a field");
  prolong_cmd->add_option("Q", q_text)->required();

  auto* detsys_cmd = app.add_subcommand("detsys", "determining equations for symbolic f, g");

  auto* check_cmd = app.add_subcommand("check", "is Q a Lie symmetry of the equation with f, g");
  check_cmd->add_option("-f", f_text)->required();
  check_cmd->add_option("-g", g_text)->required();
  check_cmd->add_option("-Q", q_text)->required();

  auto* dim_cmd = app.add_subcommand("dim", "dimension of the symmetry algebra within the ansatz");
  dim_cmd->add_option("-f", f_text)->required();
  dim_cmd->add_option("-g", g_text)->required();
  dim_cmd->add_option("--basis", basis_path, "ansatz basis file with tau, xi, eta lists");
  dim_cmd->add_option("--expect", expect_dim, "exit 1 unless the dimension equals this");

  auto* transform_cmd = app.add_subcommand("transform", "apply an equivalence transformation to f, g");
  transform_cmd->add_option("--params", params_path, "file with c0..c4, phi, phi_inverse, psi")->required();
  transform_cmd->add_option("-f", f_text)->required();
  transform_cmd->add_option("-g", g_text)->required();

  auto* verify_cmd = app.add_subcommand("verify", "run a verification campaign");
  verify_cmd->add_option("target", target)->required()->check(CLI::IsMember(kTargets));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kPass;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    ZeroTestConfig zc = zero_test_config();
    zc.samples = s.zero_test_samples;
    zc.seed = s.seed;
    set_zero_test_config(zc);

    if (*bracket_cmd) {
      VectorField v = parse_field(v_text, Chart::Base), w = parse_field(w_text, Chart::Base);
      out << bracket(v, w).str() << "\n";
      return kPass;
    }
    if (*prolong_cmd) {
      print_prolongation(out, parse_field(q_text, Chart::Base), s.jet_order);
      return kPass;
    }
    if (*detsys_cmd) {
      DeterminingSystem ds = generate_determining_system();
      out << "split variables:";
      for (Symbol v : ds.split_vars) out << " " << v.name();
      out << "\n" << ds.str();
      return kPass;
    }
    if (*check_cmd) {
      Expr f = parse_element(f_text, "f"), g = parse_element(g_text, "g");
      VectorField q = parse_field(q_text, Chart::Base);
      SymmetryCheck sc = check_symmetry(f, g, q);
      Outcome o = from_verdict(sc.verdict);
      out << to_string(o) << ": " << q.str() << "\n";
      if (sc.verdict != Verdict::Zero) out << "residual: " << sc.residual.str() << "\n";
      out << "log: " << sc.log << "\n";
      return exit_for(sc.verdict);
    }
    if (*dim_cmd) {
      Expr f = parse_element(f_text, "f"), g = parse_element(g_text, "g");
      AnsatzBasis basis = basis_path.empty() ? basis_from(s) : basis_file(basis_path);
      AnsatzSolution sol = solve_within_ansatz(f, g, basis);
      out << "dimension within ansatz: " << sol.dimension << " (" << basis.size() << " basis functions, "
          << sol.equations << " linear equations)\n";
      Verdict worst = Verdict::Zero;
      for (std::size_t i = 0; i < sol.basis.size(); ++i) {
        Verdict v = sol.checks[i].verdict;
        if (v == Verdict::Nonzero || (v == Verdict::Undecided && worst == Verdict::Zero)) worst = v;
        out << "  " << sol.basis[i].str() << "  [" << to_string(v) << "]\n";
      }
      if (worst != Verdict::Zero) return exit_for(worst);
      if (expect_dim >= 0 && sol.dimension != expect_dim) {
        out << "expected dimension " << expect_dim << "\n";
        return kFail;
      }
      return kPass;
    }
    if (*transform_cmd) {
      Expr f = parse_element(f_text, "f"), g = parse_element(g_text, "g");
      EquivalenceParams p = params_file(params_path);
      PointTransform P = equivalence_transform(p);
      TransformResult tr = transform_equation(P, f, g);
      out << "map: " << P.str() << "\n";
      if (!tr.ok) {
        out << "not in the class: " << tr.reason << "\n";
        return tr.verdict == Verdict::Undecided ? kUndecided : kFail;
      }
      if (tr.f_new && tr.g_new) {
        out << "f~ = " << tr.f_new->str() << "\n" << "g~ = " << tr.g_new->str() << "\n";
      } else {
        out << "f~ = " << tr.f_pulled.str() << "  (at the image of x, u_x)\n"
            << "g~ = " << tr.g_pulled.str() << "  (at the image of x, u_x)\n";
      }
      return kPass;
    }
    if (*verify_cmd) {
      CampaignOptions o;
      o.seed = s.seed;
      o.samples = s.samples;
      o.threads = s.threads;
      o.basis = basis_from(s);
      ReportMeta meta;
      meta.command = "verify " + target;
      meta.seed = s.seed;
      meta.samples = s.samples;
      meta.zero_test_samples = s.zero_test_samples;
      meta.threads = s.threads;
      meta.timing = s.timing;
      VerificationReport r = run_target(target, o, &meta.catalog_entries);
      std::string doc = s.format == "json" ? report_json(r, meta) : report_text(r, meta);
      if (s.report.empty()) {
        out << doc;
      } else {
        std::ofstream file(s.report);
        if (!file) throw UsageError("cannot write " + s.report);
        file << doc;
        out << "report written to " << s.report << ": " << to_string(r.outcome()) << "\n";
      }
      return exit_for(r);
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const CLI::Error& e) {
    err << "config error: " << e.what() << "\n";
    return kUsage;
  } catch (const ChartError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const AnsatzError& e) {
    err << "ansatz error: " << e.what() << "\n";
    return kUsage;
  } catch (const TransformError& e) {
    err << "transform error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace wavegc::cli
