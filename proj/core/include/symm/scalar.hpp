#pragma once

#include <cmath>
#include <concepts>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace symm {

/// Arbitrary-precision rational used by the exact backend.
using Rational = mpq_class;

/// The two scalar backends: exact rationals and IEEE doubles.
template <class T>
concept Scalar = std::same_as<T, Rational> || std::same_as<T, double>;

enum class Backend { kExactRational, kFloat64 };

template <Scalar T>
inline constexpr bool kIsExact = std::same_as<T, Rational>;

template <Scalar T>
inline constexpr Backend kBackendOf = kIsExact<T> ? Backend::kExactRational : Backend::kFloat64;

std::string_view backend_name(Backend b) noexcept;

inline double to_double(double x) noexcept { return x; }
inline double to_double(const Rational& x) { return x.get_d(); }

/// Exact conversion: every finite double is a dyadic rational.
Rational to_rational(double x);

/// Parses "n", "-n", "n/d" or a decimal literal such as "-0.125" or "1e-3"
/// into an exact rational (decimal text is read exactly, not through a double).
Rational parse_rational(std::string_view text);

/// "n" when the denominator is one, otherwise "n/d".
std::string format_rational(const Rational& x);

inline double abs_value(double x) noexcept { return std::fabs(x); }
inline Rational abs_value(const Rational& x) { return Rational(abs(x)); }

inline int sign_of(double x) noexcept { return (x > 0) - (x < 0); }
inline int sign_of(const Rational& x) { return sgn(x); }

inline bool is_zero(double x) noexcept { return x == 0.0; }
inline bool is_zero(const Rational& x) { return sgn(x) == 0; }

}  // namespace symm
