#include "acfu/rational.hpp"

#include <cstdio>

#include "acfu/error.hpp"

namespace acfu {

std::string to_fraction_string(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  try {
    mpz_class num(text.substr(0, slash), 10);
    mpz_class den = 1;
    if (slash != std::string::npos) den = mpz_class(text.substr(slash + 1), 10);
    if (den == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + text + "'");
    return make_rational(num, den);
  } catch (const std::invalid_argument&) {
    throw Error(ErrorCode::ParseError, "not a rational: '" + text + "'");
  }
}

std::string format_real(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

}  // namespace acfu
