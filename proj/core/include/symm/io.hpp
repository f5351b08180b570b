#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "symm/linalg.hpp"
#include "symm/polynomial.hpp"
#include "symm/report.hpp"

namespace symm {

/// A polynomial read from user input. Float coefficients are converted to
/// the rational with the same binary value, so every analysis runs exactly;
/// `from_float` records that this happened.
struct ParsedPolynomial {
  RationalPolynomial poly;
  bool from_float = false;
};

/// Inline coefficient list, degree-descending: "[1,0,-1]", "1, -1/2, 0.25".
/// Integers, n/d and decimals are read exactly.
ParsedPolynomial parse_coefficient_list(std::string_view text);

/// {"coeffs": [c_m, …, c_0]} with rationals as "n/d" strings and floats as
/// numbers.
ParsedPolynomial polynomial_from_json(const Json& j);
Json polynomial_to_json(const RationalPolynomial& p);

ParsedPolynomial read_polynomial_file(const std::filesystem::path& path);

/// "1,1", "1+2i, -i, 0.5": comma-separated complex entries.
ComplexVector parse_complex_vector(std::string_view text);

}  // namespace symm
