#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "symm/matrix.hpp"
#include "symm/nuij.hpp"

namespace symm {

using Json = nlohmann::ordered_json;

inline constexpr int kReportVersion = 1;

std::string library_version();

/// One certified check. `anchor` names the claim the check targets.
struct CheckRecord {
  std::string name;
  std::string anchor;
  std::optional<double> value;  ///< residual or constant; empty when not finite
  std::string kind;             ///< "residual", "constant", "count" or "flag"
  Verdict verdict = Verdict::kFail;
  std::string note;
};

struct CertifiedReport {
  int report_version = kReportVersion;
  std::string command;
  Json input = Json::object();
  std::vector<CheckRecord> checks;
  Json data = Json::object();
  std::string version = library_version();
  std::uint64_t seed = 0;

  void add(std::string name, std::string anchor, double value, std::string kind, Verdict verdict,
           std::string note = {});
  void add_flag(std::string name, std::string anchor, bool ok, std::string note = {});
  bool all_pass() const;
};

Json to_json(const CertifiedReport& r);
CertifiedReport report_from_json(const Json& j);

/// Two-space indented JSON. parse_report followed by serialize reproduces
/// the input byte for byte.
std::string serialize(const CertifiedReport& r);
CertifiedReport parse_report(std::string_view text);

Verdict parse_verdict(std::string_view s);

Json to_json(const Matrix<Rational>& m);
Json to_json(const Matrix<double>& m);
Json to_json(const Rational& x);

}  // namespace symm
