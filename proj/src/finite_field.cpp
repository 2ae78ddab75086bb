#include "acfu/finite_field.hpp"

#include <map>

#include "acfu/error.hpp"

namespace acfu {
namespace {

using Poly = std::vector<std::uint32_t>;

// Built-in moduli for the non-prime orders <= 64 (lowest degree first).
const std::map<std::pair<std::uint32_t, std::uint32_t>, Poly>& builtin_moduli() {
  static const std::map<std::pair<std::uint32_t, std::uint32_t>, Poly> table = {
      {{2, 2}, {1, 1, 1}},           // x^2 + x + 1
      {{2, 3}, {1, 1, 0, 1}},        // x^3 + x + 1
      {{2, 4}, {1, 1, 0, 0, 1}},     // x^4 + x + 1
      {{2, 5}, {1, 0, 1, 0, 0, 1}},  // x^5 + x^2 + 1
      {{2, 6}, {1, 1, 0, 0, 0, 0, 1}},
      {{3, 2}, {1, 0, 1}},           // x^2 + 1
      {{3, 3}, {1, 2, 0, 1}},        // x^3 + 2x + 1
      {{5, 2}, {2, 0, 1}},           // x^2 + 2
      {{7, 2}, {1, 0, 1}},           // x^2 + 1
  };
  return table;
}

std::uint64_t ipow(std::uint64_t base, std::uint32_t exp) {
  std::uint64_t r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  // p is prime: a^(p-2)
  std::uint64_t r = 1, b = a % p;
  for (std::uint32_t e = p - 2; e > 0; e >>= 1) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
  }
  return static_cast<std::uint32_t>(r);
}

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo a monic b.
Poly poly_mod(Poly a, const Poly& b, std::uint32_t p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  while (a.size() > db) {
    const std::uint32_t lead = a.back();
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) {
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - (lead * static_cast<std::uint64_t>(b[i])) % p) % p);
    }
    trim(a);
  }
  return a;
}

void check_element(const FieldSpec& spec, const FieldElement& a) {
  if (a.coeffs.size() != spec.m) {
    throw Error(ErrorCode::BadLength, "element has " + std::to_string(a.coeffs.size()) +
                                          " coefficients, field degree is " + std::to_string(spec.m));
  }
  for (auto c : a.coeffs) {
    if (c >= spec.p) throw Error(ErrorCode::DomainError, "coefficient out of range");
  }
}

FieldElement multiply(const FieldSpec& spec, const FieldElement& a, const FieldElement& b) {
  const std::uint32_t p = spec.p;
  Poly prod(2 * spec.m, 0);
  for (std::size_t i = 0; i < spec.m; ++i) {
    for (std::size_t j = 0; j < spec.m; ++j) {
      prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + static_cast<std::uint64_t>(a.coeffs[i]) * b.coeffs[j]) % p);
    }
  }
  Poly r = spec.m == 1 ? Poly{prod[0]} : poly_mod(prod, spec.modulus, p);
  r.resize(spec.m, 0);
  return {r};
}

}  // namespace

std::uint32_t FieldSpec::order() const { return static_cast<std::uint32_t>(ipow(p, m)); }

bool FieldElement::is_zero() const {
  for (auto c : coeffs) {
    if (c != 0) return false;
  }
  return true;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::optional<std::pair<std::uint32_t, std::uint32_t>> prime_power(std::uint64_t q) {
  if (q < 2) return std::nullopt;
  std::uint64_t p = 2;
  while (q % p != 0) ++p;
  std::uint32_t e = 0;
  while (q % p == 0) {
    q /= p;
    ++e;
  }
  if (q != 1) return std::nullopt;
  return std::make_pair(static_cast<std::uint32_t>(p), e);
}

bool is_irreducible(std::uint32_t p, const Poly& monic_poly) {
  const std::size_t deg = monic_poly.size() - 1;
  if (deg <= 1) return deg == 1;
  for (std::size_t d = 1; d <= deg / 2; ++d) {
    // every monic divisor candidate of degree d
    const std::uint64_t count = ipow(p, static_cast<std::uint32_t>(d));
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      Poly divisor(d + 1, 0);
      std::uint64_t rest = idx;
      for (std::size_t i = 0; i < d; ++i) {
        divisor[i] = static_cast<std::uint32_t>(rest % p);
        rest /= p;
      }
      divisor[d] = 1;
      if (poly_mod(monic_poly, divisor, p).empty()) return false;
    }
  }
  return true;
}

FieldSpec field_new(std::uint32_t p, std::uint32_t m, std::optional<Poly> modulus) {
  if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  if (m < 1) throw Error(ErrorCode::UnsupportedParameters, "extension degree must be >= 1");
  if (ipow(p, m) > (1u << 16)) throw Error(ErrorCode::UnsupportedSize, "field order above 2^16");
  FieldSpec spec{p, m, {}};
  if (m == 1) {
    spec.modulus = {0, 1};
    return spec;
  }
  if (!modulus) {
    const auto it = builtin_moduli().find({p, m});
    if (it == builtin_moduli().end()) {
      throw Error(ErrorCode::UnsupportedSize,
                  "no built-in modulus for GF(" + std::to_string(p) + "^" + std::to_string(m) + ")");
    }
    modulus = it->second;
  }
  if (modulus->size() != m + 1 || modulus->back() != 1) {
    throw Error(ErrorCode::ReducibleModulus, "modulus must be monic of degree " + std::to_string(m));
  }
  for (auto c : *modulus) {
    if (c >= p) throw Error(ErrorCode::ReducibleModulus, "modulus coefficient out of range");
  }
  if (!is_irreducible(p, *modulus)) throw Error(ErrorCode::ReducibleModulus, "modulus is reducible");
  spec.modulus = *modulus;
  return spec;
}

FieldSpec field_of_order(std::uint64_t q) {
  const auto pp = prime_power(q);
  if (!pp) throw Error(ErrorCode::UnsupportedParameters, std::to_string(q) + " is not a prime power");
  return field_new(pp->first, pp->second);
}

FieldElement field_arith(const FieldSpec& spec, FieldOp op, const FieldElement& a,
                         const std::optional<FieldElement>& b) {
  check_element(spec, a);
  const bool binary = op == FieldOp::Add || op == FieldOp::Sub || op == FieldOp::Mul;
  if (binary) {
    if (!b) throw Error(ErrorCode::DomainError, "binary field operation needs two operands");
    check_element(spec, *b);
  }
  const std::uint32_t p = spec.p;
  FieldElement r{std::vector<std::uint32_t>(spec.m, 0)};
  switch (op) {
    case FieldOp::Add:
      for (std::size_t i = 0; i < spec.m; ++i) r.coeffs[i] = (a.coeffs[i] + b->coeffs[i]) % p;
      return r;
    case FieldOp::Sub:
      for (std::size_t i = 0; i < spec.m; ++i) r.coeffs[i] = (a.coeffs[i] + p - b->coeffs[i]) % p;
      return r;
    case FieldOp::Neg:
      for (std::size_t i = 0; i < spec.m; ++i) r.coeffs[i] = (p - a.coeffs[i]) % p;
      return r;
    case FieldOp::Mul:
      return multiply(spec, a, *b);
    case FieldOp::Inv: {
      if (a.is_zero()) throw Error(ErrorCode::ZeroInverse, "inverse of zero");
      if (spec.m == 1) return FieldElement{{inv_mod(a.coeffs[0], p)}};
      // a^(q-2) by square-and-multiply
      FieldElement result{std::vector<std::uint32_t>(spec.m, 0)};
      result.coeffs[0] = 1;
      FieldElement base = a;
      for (std::uint64_t e = spec.order() - 2; e > 0; e >>= 1) {
        if (e & 1) result = multiply(spec, result, base);
        base = multiply(spec, base, base);
      }
      return result;
    }
  }
  return r;
}

std::vector<std::uint32_t> truncate(const FieldElement& a, std::size_t length) {
  if (length < 1 || length > a.coeffs.size()) {
    throw Error(ErrorCode::BadLength, "truncation length " + std::to_string(length) + " outside [1, " +
                                          std::to_string(a.coeffs.size()) + "]");
  }
  return {a.coeffs.begin(), a.coeffs.begin() + static_cast<std::ptrdiff_t>(length)};
}

std::uint32_t element_index(const FieldSpec& spec, const FieldElement& a) {
  check_element(spec, a);
  return static_cast<std::uint32_t>(from_digits(a.coeffs, spec.p));
}

FieldElement element_at(const FieldSpec& spec, std::uint32_t index) {
  if (index >= spec.order()) throw Error(ErrorCode::DomainError, "element index out of range");
  return {to_digits(index, spec.p, spec.m)};
}

std::vector<std::uint32_t> to_digits(std::uint64_t index, std::uint32_t base, std::size_t length) {
  std::vector<std::uint32_t> digits(length, 0);
  for (std::size_t i = length; i-- > 0;) {
    digits[i] = static_cast<std::uint32_t>(index % base);
    index /= base;
  }
  return digits;
}

std::uint64_t from_digits(const std::vector<std::uint32_t>& digits, std::uint32_t base) {
  std::uint64_t index = 0;
  for (auto d : digits) index = index * base + d;
  return index;
}

std::string vector_label(const std::vector<std::uint32_t>& digits) {
  if (digits.size() == 1) return std::to_string(digits[0]);
  std::string s = "(";
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(digits[i]);
  }
  return s + ")";
}

GaloisField::GaloisField(FieldSpec spec) : spec_(std::move(spec)), order_(spec_.order()) {
  if (order_ > 1024) throw Error(ErrorCode::UnsupportedSize, "table-driven field limited to q <= 1024");
  one_ = element_index(spec_, FieldElement{[&] {
    std::vector<std::uint32_t> c(spec_.m, 0);
    c[0] = 1;
    return c;
  }()});
  std::vector<FieldElement> elems;
  elems.reserve(order_);
  for (std::uint32_t i = 0; i < order_; ++i) elems.push_back(element_at(spec_, i));
  add_.resize(static_cast<std::size_t>(order_) * order_);
  mul_.resize(static_cast<std::size_t>(order_) * order_);
  neg_.resize(order_);
  inv_.assign(order_, 0);
  for (std::uint32_t i = 0; i < order_; ++i) {
    neg_[i] = element_index(spec_, field_arith(spec_, FieldOp::Neg, elems[i]));
    for (std::uint32_t j = 0; j < order_; ++j) {
      add_[i * order_ + j] = element_index(spec_, field_arith(spec_, FieldOp::Add, elems[i], elems[j]));
      mul_[i * order_ + j] = element_index(spec_, field_arith(spec_, FieldOp::Mul, elems[i], elems[j]));
      if (mul_[i * order_ + j] == one_) inv_[i] = j;
    }
  }
}

std::uint32_t GaloisField::inv(std::uint32_t a) const {
  if (a == 0) throw Error(ErrorCode::ZeroInverse, "inverse of zero");
  return inv_[a];
}

std::string GaloisField::label(std::uint32_t index) const { return vector_label(element_at(spec_, index).coeffs); }

}  // namespace acfu
