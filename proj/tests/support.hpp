#pragma once

#include <optional>
#include <string>

#include "acfu/error.hpp"
#include "acfu/rational.hpp"

namespace testing {

// Code of the acfu::Error thrown by fn, or nullopt when nothing is thrown.
template <class Fn>
std::optional<acfu::ErrorCode> thrown_code(Fn&& fn) {
  try {
    fn();
  } catch (const acfu::Error& e) {
    return e.code();
  }
  return std::nullopt;
}

inline acfu::Rational q(long num, long den = 1) { return acfu::make_rational(num, den); }

inline std::string str(const acfu::Rational& r) { return acfu::to_fraction_string(r); }

}  // namespace testing
