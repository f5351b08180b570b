#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "commands.hpp"
#include "symm/errors.hpp"
#include "symm/nuij.hpp"

namespace {

enum ExitCode { kAllPass = 0, kSomeFail = 1, kParseError = 2, kNonHyperbolic = 3 };

struct Flags {
  std::string poly;
  std::string poly_file;
  double tol = 1e-9;
  std::string output = "json";
  std::string csv_file;
  std::uint64_t seed = 0;
  std::string q;
  std::optional<double> eps;
  std::string eps_grid = "1:1e-4:9(log)";
  std::optional<double> r;
  std::optional<double> s;
  int samples = 64;
  std::string u0;
  double t_end = 10.0;
  int steps = 200;
};

void add_common(CLI::App* sub, Flags& f) {
  auto* poly = sub->add_option("--poly", f.poly, "Coefficients, degree-descending: \"[1,0,-1]\"; n/d allowed");
  auto* file = sub->add_option("--poly-file", f.poly_file, "JSON file {\"coeffs\": [...]}");
  poly->excludes(file);
  sub->add_option("--tol", f.tol, "Root and PSD tolerance")->capture_default_str();
  sub->add_option("--output", f.output, "json, csv or both")
      ->check(CLI::IsMember({"json", "csv", "both"}))
      ->capture_default_str();
  sub->add_option("--csv-file", f.csv_file, "Write CSV here instead of stdout");
  sub->add_option("--seed", f.seed, "Seed for randomized cross-checks; SYMM_SEED overrides")->capture_default_str();
}

void add_grid(CLI::App* sub, Flags& f) {
  auto* eps = sub->add_option("--eps", f.eps, "Single epsilon");
  sub->add_option("--eps-grid,--grid", f.eps_grid, "hi:lo:n with (log) or (lin) spacing, or \"default\"")
      ->capture_default_str()
      ->excludes(eps);
}

std::vector<double> grid_of(const Flags& f) {
  if (f.eps) {
    if (!(*f.eps > 0.0)) throw symm::ParseError("--eps must be positive");
    return {*f.eps};
  }
  if (f.eps_grid == "default") return symm::default_epsilon_grid();
  return symm::parse_epsilon_grid(f.eps_grid);
}

symm::cli::CommonOptions common_of(const Flags& f) {
  symm::cli::CommonOptions c;
  if (!f.poly.empty()) {
    c.poly = symm::parse_coefficient_list(f.poly);
    c.poly_text = f.poly;
  } else if (!f.poly_file.empty()) {
    c.poly = symm::read_polynomial_file(f.poly_file);
    c.poly_text = f.poly_file;
  } else {
    throw symm::ParseError("one of --poly or --poly-file is required");
  }
  c.tol = f.tol;
  c.seed = f.seed;
  if (const char* env = std::getenv("SYMM_SEED")) {
    try {
      c.seed = std::stoull(env);
    } catch (const std::exception&) {
      throw symm::ParseError("SYMM_SEED must be a non-negative integer");
    }
  }
  return c;
}

void emit(const symm::cli::CommandResult& res, const Flags& f) {
  if (f.output == "json" || f.output == "both") std::cout << symm::serialize(res.report);
  if (f.output == "csv" || f.output == "both") {
    const std::vector<std::string> rows = res.csv.empty() ? symm::cli::checks_csv(res.report) : res.csv;
    if (!f.csv_file.empty()) {
      std::ofstream out(f.csv_file);
      if (!out) throw symm::ParseError("cannot write " + f.csv_file);
      for (const auto& row : rows) out << row << '\n';
    } else {
      for (const auto& row : rows) std::cout << row << '\n';
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Certify Bezout-matrix symmetrizers of hyperbolic polynomials"};
  app.require_subcommand(1);
  Flags f;

  auto* analyze = app.add_subcommand("analyze", "Bezout matrix, PSD, separation and resultant checks");
  add_common(analyze, f);
  analyze->add_option("--q", f.q, "Second polynomial; defaults to p'");

  auto* nuij = app.add_subcommand("nuij", "Nuij family root gaps, interlacing and inversion");
  add_common(nuij, f);
  add_grid(nuij, f);

  auto* quasi = app.add_subcommand("quasi", "Quasi-symmetrizer conditions and uniform bounds");
  add_common(quasi, f);
  add_grid(quasi, f);
  quasi->add_option("--r", f.r, "Exponent r; defaults to max multiplicity - 1");
  quasi->add_option("--s", f.s, "Exponent s; defaults to 1");
  quasi->add_option("--samples", f.samples, "Random (z, w) pairs per epsilon")->capture_default_str();

  auto* leray = app.add_subcommand("leray", "Power-sum symmetrizer and its relation to H");
  add_common(leray, f);

  auto* energy = app.add_subcommand("energy", "Energy along solutions of D_t U = A U");
  add_common(energy, f);
  energy->add_option("--q", f.q, "Form polynomial; defaults to p'");
  energy->add_option("--U0", f.u0, "Initial state, comma-separated complex entries")->required();
  energy->add_option("--T", f.t_end, "Final time")->capture_default_str();
  energy->add_option("--steps", f.steps, "Time steps")->capture_default_str()->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kAllPass : kParseError;
  }

  try {
    const symm::cli::CommonOptions common = common_of(f);
    symm::cli::CommandResult res;
    if (analyze->parsed()) {
      symm::cli::AnalyzeOptions o;
      if (!f.q.empty()) o.q = symm::parse_coefficient_list(f.q);
      res = symm::cli::run_analyze(common, o);
    } else if (nuij->parsed()) {
      res = symm::cli::run_nuij(common, {grid_of(f)});
    } else if (quasi->parsed()) {
      res = symm::cli::run_quasi(common, {grid_of(f), f.r, f.s, f.samples});
    } else if (leray->parsed()) {
      res = symm::cli::run_leray(common);
    } else {
      symm::cli::EnergyOptions o;
      if (!f.q.empty()) o.q = symm::parse_coefficient_list(f.q);
      o.u0 = symm::parse_complex_vector(f.u0);
      o.t_end = f.t_end;
      o.steps = f.steps;
      res = symm::cli::run_energy(common, o);
    }
    emit(res, f);
    return res.report.all_pass() ? kAllPass : kSomeFail;
  } catch (const symm::NonHyperbolicError& e) {
    std::cerr << "non-hyperbolic: " << e.what() << '\n';
    return kNonHyperbolic;
  } catch (const symm::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kParseError;
  } catch (const symm::DegreeMismatchError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kParseError;
  } catch (const symm::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kSomeFail;
  }
}
