#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace acfu {

/// Exact rational number backed by GMP. Always kept in canonical form.
using Rational = mpq_class;

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
  Rational r(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
  r.canonicalize();
  return r;
}

inline Rational make_rational(const mpz_class& num, const mpz_class& den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

/// "numerator/denominator", denominator always present ("3/1").
std::string to_fraction_string(const Rational& r);

/// Accepts "n/d" or a bare integer "n". Throws Error(ParseError).
Rational parse_rational(const std::string& text);

/// 12 significant digits, the project-wide format for derived reals.
std::string format_real(double value);

}  // namespace acfu
