#include "symm/io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "symm/errors.hpp"

namespace symm {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_commas(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i)
    if (i == s.size() || s[i] == ',') {
      out.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  return out;
}

double parse_double(std::string_view s) {
  s = trim(s);
  double v = 0.0;
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) throw ParseError("not a number: '" + std::string(s) + "'");
  return v;
}

RationalPolynomial checked(std::vector<Rational> coeffs) {
  if (coeffs.empty()) throw ParseError("polynomial: empty coefficient list");
  RationalPolynomial p(std::move(coeffs));
  if (p.is_zero()) throw ParseError("polynomial: all coefficients are zero");
  return p;
}

}  // namespace

ParsedPolynomial parse_coefficient_list(std::string_view text) {
  std::string_view body = trim(text);
  if (!body.empty() && body.front() == '[') {
    if (body.back() != ']') throw ParseError("coefficient list: missing ']'");
    body = trim(body.substr(1, body.size() - 2));
  }
  if (body.empty()) throw ParseError("coefficient list: empty");
  std::vector<Rational> coeffs;
  for (std::string_view tok : split_commas(body)) {
    std::string_view t = tok;
    if (t.size() >= 2 && t.front() == '"' && t.back() == '"') t = t.substr(1, t.size() - 2);
    coeffs.push_back(parse_rational(t));
  }
  return {checked(std::move(coeffs)), false};
}

ParsedPolynomial polynomial_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("coeffs") || !j.at("coeffs").is_array())
    throw ParseError("polynomial JSON: expected {\"coeffs\": [...]}");
  ParsedPolynomial out;
  std::vector<Rational> coeffs;
  for (const Json& c : j.at("coeffs")) {
    if (c.is_number_integer()) {
      coeffs.emplace_back(c.dump());
    } else if (c.is_number_float()) {
      coeffs.push_back(to_rational(c.get<double>()));
      out.from_float = true;
    } else if (c.is_string()) {
      coeffs.push_back(parse_rational(c.get<std::string>()));
    } else {
      throw ParseError("polynomial JSON: coefficient must be a number or an \"n/d\" string");
    }
  }
  out.poly = checked(std::move(coeffs));
  return out;
}

Json polynomial_to_json(const RationalPolynomial& p) {
  Json coeffs = Json::array();
  for (const Rational& c : p.coeffs()) coeffs.push_back(to_json(c));
  return Json{{"coeffs", coeffs}};
}

ParsedPolynomial read_polynomial_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return polynomial_from_json(Json::parse(buf.str()));
  } catch (const Json::parse_error& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

ComplexVector parse_complex_vector(std::string_view text) {
  std::string_view body = trim(text);
  if (!body.empty() && body.front() == '[' && body.back() == ']') body = trim(body.substr(1, body.size() - 2));
  if (body.empty()) throw ParseError("complex vector: empty");
  ComplexVector out;
  for (std::string_view tok : split_commas(body)) {
    std::string s;
    for (char ch : tok)
      if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    if (s.empty()) throw ParseError("complex vector: empty entry");
    if (s.back() != 'i') {
      out.emplace_back(parse_double(s), 0.0);
      continue;
    }
    s.pop_back();
    // Split "a+b" / "a-b" at the last sign that is not part of an exponent.
    std::size_t cut = std::string::npos;
    for (std::size_t i = s.size(); i-- > 1;)
      if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') {
        cut = i;
        break;
      }
    const std::string re = cut == std::string::npos ? "0" : s.substr(0, cut);
    std::string im = cut == std::string::npos ? s : s.substr(cut);
    if (im.empty() || im == "+" || im == "-") im += "1";
    out.emplace_back(parse_double(re), parse_double(im));
  }
  return out;
}

}  // namespace symm
