#include <cctype>
#include <cmath>
#include <string>

#include "symm/errors.hpp"
#include "symm/polynomial.hpp"
#include "symm/scalar.hpp"

namespace symm {

std::string_view backend_name(Backend b) noexcept {
  return b == Backend::kExactRational ? "exact-rational" : "float64";
}

Rational to_rational(double x) {
  if (!std::isfinite(x)) throw std::domain_error("to_rational: non-finite value");
  return Rational(x);
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

Rational pow10(long e) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(e < 0 ? -e : e));
  return e < 0 ? Rational(mpz_class(1), p) : Rational(p);
}

// [+-]digits[.digits][(e|E)[+-]digits]
Rational parse_decimal(std::string_view s) {
  bool neg = false;
  if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
    neg = s[0] == '-';
    s.remove_prefix(1);
  }
  long exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view ex = s.substr(e + 1);
    bool eneg = false;
    if (!ex.empty() && (ex[0] == '+' || ex[0] == '-')) {
      eneg = ex[0] == '-';
      ex.remove_prefix(1);
    }
    if (!all_digits(ex) || ex.size() > 6) throw ParseError("bad exponent in '" + std::string(s) + "'");
    exponent = std::stol(std::string(ex));
    if (eneg) exponent = -exponent;
    s = s.substr(0, e);
  }
  std::string digits;
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view ip = s.substr(0, dot);
    std::string_view fp = s.substr(dot + 1);
    if ((!ip.empty() && !all_digits(ip)) || (!fp.empty() && !all_digits(fp)) || (ip.empty() && fp.empty()))
      throw ParseError("bad decimal '" + std::string(s) + "'");
    digits = std::string(ip) + std::string(fp);
    exponent -= static_cast<long>(fp.size());
  } else {
    if (!all_digits(s)) throw ParseError("bad number '" + std::string(s) + "'");
    digits = std::string(s);
  }
  Rational r{mpz_class(digits, 10)};
  r *= pow10(exponent);
  r.canonicalize();
  return neg ? Rational(-r) : r;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = trim(text);
  if (s.empty()) throw ParseError("empty number");
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    Rational num = parse_decimal(trim(s.substr(0, slash)));
    Rational den = parse_decimal(trim(s.substr(slash + 1)));
    if (is_zero(den)) throw ParseError("zero denominator in '" + std::string(s) + "'");
    Rational q = num / den;
    q.canonicalize();
    return q;
  }
  return parse_decimal(s);
}

std::string format_rational(const Rational& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

RationalPolynomial gcd(RationalPolynomial a, RationalPolynomial b) {
  while (!b.is_zero()) {
    auto [q, r] = divmod(a, b);
    a = std::move(b);
    b = r.is_zero() ? std::move(r) : r.monic();
  }
  return a.is_zero() ? a : a.monic();
}

}  // namespace symm
