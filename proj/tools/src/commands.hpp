#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "symm/io.hpp"
#include "symm/report.hpp"

namespace symm::cli {

struct CommonOptions {
  ParsedPolynomial poly;
  std::string poly_text;  ///< as given, for the input echo
  double tol = 1e-9;
  std::uint64_t seed = 0;
};

/// A report plus optional CSV rows (header first).
struct CommandResult {
  CertifiedReport report;
  std::vector<std::string> csv;
};

struct AnalyzeOptions {
  std::optional<ParsedPolynomial> q;
};

struct NuijOptions {
  std::vector<double> grid;
};

struct QuasiOptions {
  std::vector<double> grid;
  std::optional<double> r;
  std::optional<double> s;
  int samples = 64;
};

struct EnergyOptions {
  std::optional<ParsedPolynomial> q;
  ComplexVector u0;
  double t_end = 10.0;
  int steps = 200;
};

CommandResult run_analyze(const CommonOptions& common, const AnalyzeOptions& opts);
CommandResult run_nuij(const CommonOptions& common, const NuijOptions& opts);
CommandResult run_quasi(const CommonOptions& common, const QuasiOptions& opts);
CommandResult run_leray(const CommonOptions& common);
CommandResult run_energy(const CommonOptions& common, const EnergyOptions& opts);

/// name,anchor,value,verdict rows for every check.
std::vector<std::string> checks_csv(const CertifiedReport& report);

}  // namespace symm::cli
