#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>

#include <gtest/gtest.h>

#include "common.hpp"
#include "generators.hpp"
#include "symm/io.hpp"
#include "symm/nuij.hpp"
#include "symm/report.hpp"

#if SYMM_HAVE_CLI
#include "commands.hpp"
#endif

namespace symm::testing {
namespace {

CertifiedReport sample_report() {
  CertifiedReport r;
  r.command = "analyze";
  r.seed = 42;
  r.input["poly"] = polynomial_to_json(rp({1, 0, -1}));
  r.add("bezout_symmetric", "bezout-symmetrizes-companion", 0.0, "residual", Verdict::kPass);
  r.add("psd_min_eigenvalue", "hermite-criterion", 0.1 + 0.2, "constant", Verdict::kPass, "note with \"quotes\"");
  r.add("blowup", "quasi-symmetrizer-bound", std::numeric_limits<double>::infinity(), "constant", Verdict::kFail);
  r.add("tiny", "nuij-root-gap", 1e-300, "constant", Verdict::kMarginal);
  r.add_flag("interlacing", "separation-lemma", true);
  r.data["h"] = to_json(rm({{2, 0}, {0, 2}}));
  r.data["frac"] = to_json(ratio(-3, 7));
  return r;
}

TEST(Report, ByteIdenticalRoundTrip) {
  const std::string text = serialize(sample_report());
  EXPECT_EQ(serialize(parse_report(text)), text);
  EXPECT_EQ(text.back(), '\n');
}

TEST(Report, FieldsSurviveRoundTrip) {
  const auto back = parse_report(serialize(sample_report()));
  EXPECT_EQ(back.report_version, kReportVersion);
  EXPECT_EQ(back.command, "analyze");
  EXPECT_EQ(back.seed, 42u);
  ASSERT_EQ(back.checks.size(), 5u);
  EXPECT_DOUBLE_EQ(*back.checks[1].value, 0.1 + 0.2);
  EXPECT_EQ(back.checks[1].note, "note with \"quotes\"");
  EXPECT_FALSE(back.checks[2].value.has_value());
  EXPECT_EQ(back.checks[3].verdict, Verdict::kMarginal);
  EXPECT_FALSE(back.all_pass());
  EXPECT_EQ(back.version, library_version());
}

TEST(Report, VerdictNames) {
  for (Verdict v : {Verdict::kPass, Verdict::kMarginal, Verdict::kFail}) EXPECT_EQ(parse_verdict(verdict_name(v)), v);
  EXPECT_THROW(parse_verdict("maybe"), ParseError);
}

TEST(Report, RejectsOtherVersionsAndJunk) {
  auto j = to_json(sample_report());
  j["report_version"] = 99;
  EXPECT_THROW(report_from_json(j), ParseError);
  EXPECT_THROW(parse_report("{not json"), ParseError);
  EXPECT_THROW(parse_report("[]"), ParseError);
}

TEST(Report, AllPassIgnoresNothing) {
  CertifiedReport r;
  r.add_flag("a", "x", true);
  EXPECT_TRUE(r.all_pass());
  r.add("b", "x", 1.0, "constant", Verdict::kMarginal);
  EXPECT_FALSE(r.all_pass());
}

#if SYMM_HAVE_CLI
// Reports produced by the command layer round-trip byte for byte.
TEST(Report, CommandReportsRoundTrip) {
  cli::CommonOptions common;
  common.poly = parse_coefficient_list("[1,0,-1,0]");
  common.poly_text = "[1,0,-1,0]";
  std::vector<CertifiedReport> reports;
  reports.push_back(cli::run_analyze(common, {}).report);
  reports.push_back(cli::run_nuij(common, {{0.1, 0.01}}).report);
  reports.push_back(cli::run_quasi(common, {default_epsilon_grid(), std::nullopt, std::nullopt, 8}).report);
  reports.push_back(cli::run_leray(common).report);
  cli::EnergyOptions eo;
  eo.u0 = parse_complex_vector("1,0,1");
  eo.steps = 50;
  reports.push_back(cli::run_energy(common, eo).report);
  for (const auto& r : reports) {
    const std::string text = serialize(r);
    EXPECT_EQ(serialize(parse_report(text)), text) << r.command;
    EXPECT_TRUE(r.all_pass()) << text;
  }
}
#endif

TEST(CoefficientList, Forms) {
  EXPECT_EQ(parse_coefficient_list("[1,0,-1]").poly, rp({1, 0, -1}));
  EXPECT_EQ(parse_coefficient_list(" 1 , 0 , -1 ").poly, rp({1, 0, -1}));
  const auto half = parse_coefficient_list("[1, -1/2, 0.25]");
  EXPECT_EQ(half.poly, (RationalPolynomial{Rational(1), ratio(-1, 2), ratio(1, 4)}));
  EXPECT_FALSE(half.from_float);
  EXPECT_EQ(parse_coefficient_list("[2/4, 1]").poly.coeffs().front(), ratio(1, 2));
  EXPECT_EQ(parse_coefficient_list("[0, 1, 0, -1]").poly, rp({1, 0, -1}));
  EXPECT_THROW(parse_coefficient_list("[1, x]"), ParseError);
  EXPECT_THROW(parse_coefficient_list("[]"), ParseError);
  EXPECT_THROW(parse_coefficient_list("[1, 1/0]"), ParseError);
}

TEST(CoefficientList, RationalParsing) {
  EXPECT_EQ(parse_rational("-3/6"), ratio(-1, 2));
  EXPECT_EQ(parse_rational("1e-3"), ratio(1, 1000));
  EXPECT_EQ(parse_rational("0.1"), ratio(1, 10));
  EXPECT_EQ(format_rational(ratio(6, 4)), "3/2");
  EXPECT_EQ(to_rational(0.5), ratio(1, 2));
  EXPECT_EQ(to_rational(0.1).get_d(), 0.1);
}

TEST(PolynomialJson, RoundTrip) {
  Engine rng(91);
  for (int trial = 0; trial < 50; ++trial) {
    const auto p = random_monic(rng, uniform_int(rng, 1, 6));
    EXPECT_EQ(polynomial_from_json(polynomial_to_json(p)).poly, p);
  }
  const auto f = polynomial_from_json(Json::parse(R"({"coeffs": [1, 0.5, "-1/3"]})"));
  EXPECT_TRUE(f.from_float);
  EXPECT_EQ(f.poly, (RationalPolynomial{Rational(1), ratio(1, 2), ratio(-1, 3)}));
  EXPECT_THROW(polynomial_from_json(Json::parse(R"({"coef": [1]})")), ParseError);
}

TEST(PolynomialJson, ReadsFile) {
  const auto path = std::filesystem::temp_directory_path() / "symm_poly_test.json";
  std::ofstream(path) << R"({"coeffs": ["1", "0", "-1"]})";
  EXPECT_EQ(read_polynomial_file(path).poly, rp({1, 0, -1}));
  std::filesystem::remove(path);
  EXPECT_THROW(read_polynomial_file(path), ParseError);
}

TEST(ComplexVector, Forms) {
  const auto v = parse_complex_vector("1, 1+2i, -i, 0.5, 3i, -2-0.5i");
  ASSERT_EQ(v.size(), 6u);
  EXPECT_EQ(v[0], std::complex<double>(1, 0));
  EXPECT_EQ(v[1], std::complex<double>(1, 2));
  EXPECT_EQ(v[2], std::complex<double>(0, -1));
  EXPECT_EQ(v[3], std::complex<double>(0.5, 0));
  EXPECT_EQ(v[4], std::complex<double>(0, 3));
  EXPECT_EQ(v[5], std::complex<double>(-2, -0.5));
  EXPECT_THROW(parse_complex_vector("1,,2"), ParseError);
  EXPECT_THROW(parse_complex_vector("1+j"), ParseError);
}

}  // namespace
}  // namespace symm::testing
