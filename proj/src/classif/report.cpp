#include "wavegc/classif/report.hpp"

#include <cstdio>
#include <json.hpp>
#include <sstream>

namespace wavegc {

const char* to_string(Outcome o) {
  switch (o) {
    case Outcome::Pass: return "pass";
    case Outcome::Fail: return "fail";
    case Outcome::Undecided: return "undecided";
  }
  return "?";
}

Outcome from_verdict(Verdict v) {
  switch (v) {
    case Verdict::Zero: return Outcome::Pass;
    case Verdict::Nonzero: return Outcome::Fail;
    case Verdict::Undecided: return Outcome::Undecided;
  }
  return Outcome::Undecided;
}

Outcome combine(Outcome a, Outcome b) {
  if (a == Outcome::Fail || b == Outcome::Fail) return Outcome::Fail;
  if (a == Outcome::Undecided || b == Outcome::Undecided) return Outcome::Undecided;
  return Outcome::Pass;
}

Outcome CaseRecord::outcome() const {
  Outcome o = Outcome::Pass;
  for (const auto& c : checks) o = combine(o, c.outcome);
  return o;
}

void CaseRecord::expect(const std::string& name, bool ok, const std::string& detail) {
  checks.push_back({name, ok ? Outcome::Pass : Outcome::Fail, detail});
}

Outcome VerificationReport::outcome() const {
  Outcome o = Outcome::Pass;
  for (const auto& r : records) o = combine(o, r.outcome());
  return o;
}

int VerificationReport::count(Outcome o) const {
  int n = 0;
  for (const auto& r : records) n += r.outcome() == o;
  return n;
}

int VerificationReport::undecided_checks() const {
  int n = 0;
  for (const auto& r : records)
    for (const auto& c : r.checks) n += c.outcome == Outcome::Undecided;
  return n;
}

void VerificationReport::append(const VerificationReport& other) {
  records.insert(records.end(), other.records.begin(), other.records.end());
}

namespace {

std::string clip(std::string s, std::size_t n = 400) {
  if (s.size() > n) s = s.substr(0, n) + "...";
  return s;
}

}  // namespace

Check zero_check(const std::string& name, const Expr& e) {
  if (numerator(e).is_zero()) return {name, Outcome::Pass, ""};
  ZeroTestResult zt = zero_test(e);
  Check c{name, from_verdict(zt.verdict), ""};
  if (c.outcome == Outcome::Fail) c.detail = "residual " + clip(e.str()) + " nonzero at " + zt.witness;
  if (c.outcome == Outcome::Undecided) c.detail = "undecided residual " + clip(e.str());
  return c;
}

Check field_check(const std::string& name, const VectorField& got, const VectorField& want) {
  if (got.chart() != want.chart())
    return {name, Outcome::Fail, std::string("chart mismatch: ") + chart_name(got.chart()) + " vs " + chart_name(want.chart())};
  Outcome o = Outcome::Pass;
  std::string detail;
  const auto& coords = chart_coordinates(got.chart());
  for (std::size_t i = 0; i < coords.size(); ++i) {
    Check c = zero_check(name, got.coeff(i) - want.coeff(i));
    if (c.outcome != Outcome::Pass && detail.empty())
      detail = "d" + coords[i].name() + " coefficient: got " + clip(got.coeff(i).str(), 200) + ", want " +
               clip(want.coeff(i).str(), 200);
    o = combine(o, c.outcome);
  }
  return {name, o, detail};
}

std::string report_json(const VerificationReport& r, const ReportMeta& meta) {
  using nlohmann::ordered_json;
  ordered_json doc;
  doc["schema"] = kReportSchema;
  doc["command"] = meta.command;
  doc["seed"] = meta.seed;
  doc["parameter_samples"] = meta.samples;
  doc["zero_test_samples"] = meta.zero_test_samples;
  doc["dimension_scope"] = "within ansatz";
  if (meta.timing) doc["threads"] = meta.threads;
  ordered_json recs = ordered_json::array();
  for (const auto& rec : r.records) {
    ordered_json j;
    j["campaign"] = rec.campaign;
    j["id"] = rec.id;
    j["title"] = rec.title;
    if (!rec.f.empty()) {
      j["f"] = rec.f;
      j["g"] = rec.g;
      j["extension"] = rec.extension;
    }
    j["outcome"] = to_string(rec.outcome());
    if (rec.expected_dim >= 0) {
      j["expected_dim"] = rec.expected_dim;
      j["ansatz_dims"] = rec.ansatz_dims;
      j["samples"] = rec.samples;
    }
    ordered_json checks = ordered_json::array();
    for (const auto& c : rec.checks) {
      ordered_json cj;
      cj["name"] = c.name;
      cj["outcome"] = to_string(c.outcome);
      if (!c.detail.empty()) cj["detail"] = c.detail;
      checks.push_back(cj);
    }
    j["checks"] = checks;
    if (meta.timing) j["seconds"] = rec.seconds;
    recs.push_back(j);
  }
  doc["records"] = recs;
  ordered_json footer;
  footer["records"] = r.records.size();
  footer["pass"] = r.count(Outcome::Pass);
  footer["fail"] = r.count(Outcome::Fail);
  footer["undecided"] = r.count(Outcome::Undecided);
  footer["undecided_checks"] = r.undecided_checks();
  if (meta.catalog_entries >= 0) {
    int seen = 0;
    for (const auto& rec : r.records) seen += rec.campaign == "catalog";
    footer["catalog_entries"] = meta.catalog_entries;
    footer["catalog_entries_verified"] = seen;
    footer["catalog_complete"] = seen == meta.catalog_entries;
  }
  footer["outcome"] = to_string(r.outcome());
  doc["footer"] = footer;
  return doc.dump(2) + "\n";
}

std::string report_text(const VerificationReport& r, const ReportMeta& meta) {
  std::ostringstream out;
  char buf[512];
  bool header = false;
  for (const auto& rec : r.records) {
    if (rec.campaign != "catalog") continue;
    if (!header) {
      std::snprintf(buf, sizeof buf, "%-7s %-34s %-34s %-4s %-10s %s\n", "N", "f", "g", "dim", "ansatz", "result");
      out << buf;
      header = true;
    }
    std::string dims;
    for (int d : rec.ansatz_dims) dims += (dims.empty() ? "" : ",") + std::to_string(d);
    std::snprintf(buf, sizeof buf, "%-7s %-34s %-34s %-4d %-10s %s\n", rec.id.c_str(), rec.f.c_str(), rec.g.c_str(),
                  rec.expected_dim, dims.c_str(), to_string(rec.outcome()));
    out << buf;
    out << "        extension: " << rec.extension << "\n";
  }
  if (header) out << "(dimensions are within ansatz)\n\n";
  for (const auto& rec : r.records) {
    if (rec.campaign == "catalog") continue;
    std::snprintf(buf, sizeof buf, "%-12s %-22s %-9s %s\n", rec.campaign.c_str(), rec.id.c_str(),
                  to_string(rec.outcome()), rec.title.c_str());
    out << buf;
  }
  for (const auto& rec : r.records)
    for (const auto& c : rec.checks)
      if (c.outcome != Outcome::Pass)
        out << "  " << rec.campaign << "/" << rec.id << " " << c.name << ": " << to_string(c.outcome) << " "
            << c.detail << "\n";
  out << "records " << r.records.size() << ": " << r.count(Outcome::Pass) << " pass, " << r.count(Outcome::Fail)
      << " fail, " << r.count(Outcome::Undecided) << " undecided";
  if (meta.catalog_entries >= 0) {
    int seen = 0;
    for (const auto& rec : r.records) seen += rec.campaign == "catalog";
    out << "; catalog " << seen << "/" << meta.catalog_entries;
  }
  out << "\n";
  return out.str();
}

}  // namespace wavegc
