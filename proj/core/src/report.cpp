#include "symm/report.hpp"

#include <cmath>

#include "symm/errors.hpp"

#ifndef SYMM_VERSION
#define SYMM_VERSION "0.0.0"
#endif

namespace symm {

std::string library_version() { return SYMM_VERSION; }

void CertifiedReport::add(std::string name, std::string anchor, double value, std::string kind, Verdict verdict,
                          std::string note) {
  CheckRecord rec;
  rec.name = std::move(name);
  rec.anchor = std::move(anchor);
  if (std::isfinite(value)) rec.value = value;
  rec.kind = std::move(kind);
  rec.verdict = verdict;
  rec.note = std::move(note);
  checks.push_back(std::move(rec));
}

void CertifiedReport::add_flag(std::string name, std::string anchor, bool ok, std::string note) {
  add(std::move(name), std::move(anchor), ok ? 1.0 : 0.0, "flag", ok ? Verdict::kPass : Verdict::kFail,
      std::move(note));
}

bool CertifiedReport::all_pass() const {
  for (const CheckRecord& c : checks)
    if (c.verdict != Verdict::kPass) return false;
  return true;
}

Verdict parse_verdict(std::string_view s) {
  if (s == "pass") return Verdict::kPass;
  if (s == "marginal") return Verdict::kMarginal;
  if (s == "fail") return Verdict::kFail;
  throw ParseError("unknown verdict: " + std::string(s));
}

Json to_json(const Rational& x) {
  if (x.get_den() == 1 && x.get_num().fits_slong_p()) return Json(x.get_num().get_si());
  return Json(format_rational(x));
}

Json to_json(const Matrix<Rational>& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json(const Matrix<double>& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json(const CertifiedReport& r) {
  Json j = Json::object();
  j["report_version"] = r.report_version;
  j["command"] = r.command;
  j["input"] = r.input;
  Json checks = Json::array();
  for (const CheckRecord& c : r.checks) {
    Json rec = Json::object();
    rec["name"] = c.name;
    rec["anchor"] = c.anchor;
    rec["value"] = c.value ? Json(*c.value) : Json(nullptr);
    rec["kind"] = c.kind;
    rec["verdict"] = verdict_name(c.verdict);
    if (!c.note.empty()) rec["note"] = c.note;
    checks.push_back(std::move(rec));
  }
  j["checks"] = std::move(checks);
  j["data"] = r.data;
  j["environment"] = Json{{"version", r.version}, {"seed", r.seed}};
  j["all_pass"] = r.all_pass();
  return j;
}

CertifiedReport report_from_json(const Json& j) {
  try {
    CertifiedReport r;
    r.report_version = j.at("report_version").get<int>();
    if (r.report_version != kReportVersion)
      throw ParseError("unsupported report_version " + std::to_string(r.report_version));
    r.command = j.at("command").get<std::string>();
    r.input = j.at("input");
    for (const Json& rec : j.at("checks")) {
      CheckRecord c;
      c.name = rec.at("name").get<std::string>();
      c.anchor = rec.at("anchor").get<std::string>();
      if (!rec.at("value").is_null()) c.value = rec.at("value").get<double>();
      c.kind = rec.at("kind").get<std::string>();
      c.verdict = parse_verdict(rec.at("verdict").get<std::string>());
      if (rec.contains("note")) c.note = rec.at("note").get<std::string>();
      r.checks.push_back(std::move(c));
    }
    r.data = j.at("data");
    r.version = j.at("environment").at("version").get<std::string>();
    r.seed = j.at("environment").at("seed").get<std::uint64_t>();
    return r;
  } catch (const Json::exception& e) {
    throw ParseError(std::string("report: ") + e.what());
  }
}

std::string serialize(const CertifiedReport& r) { return to_json(r).dump(2) + "\n"; }

CertifiedReport parse_report(std::string_view text) {
  try {
    return report_from_json(Json::parse(text));
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("report: ") + e.what());
  }
}

}  // namespace symm
