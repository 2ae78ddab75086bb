#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace acfu {

/// GF(p^m) described by its characteristic, degree and a monic irreducible
/// modulus (coefficients lowest degree first, length m + 1).
struct FieldSpec {
  std::uint32_t p = 2;
  std::uint32_t m = 1;
  std::vector<std::uint32_t> modulus;

  std::uint32_t order() const;
  bool operator==(const FieldSpec&) const = default;
};

/// Coefficient vector over GF(p), lowest degree first, length exactly m.
struct FieldElement {
  std::vector<std::uint32_t> coeffs;

  bool is_zero() const;
  bool operator==(const FieldElement&) const = default;
};

enum class FieldOp { Add, Sub, Mul, Inv, Neg };

bool is_prime(std::uint64_t n);

/// (p, e) with q = p^e, or nullopt if q is not a prime power.
std::optional<std::pair<std::uint32_t, std::uint32_t>> prime_power(std::uint64_t q);

/// Monic irreducible polynomial of degree m over GF(p), tested by exhaustive
/// trial division by every monic polynomial of degree <= m/2.
bool is_irreducible(std::uint32_t p, const std::vector<std::uint32_t>& monic_poly);

/// Validates (p, m, modulus). Without a modulus the built-in table supplies
/// one for every prime power <= 64.
FieldSpec field_new(std::uint32_t p, std::uint32_t m,
                    std::optional<std::vector<std::uint32_t>> modulus = std::nullopt);

/// Field for a prime power q using the built-in modulus.
FieldSpec field_of_order(std::uint64_t q);

FieldElement field_arith(const FieldSpec& spec, FieldOp op, const FieldElement& a,
                         const std::optional<FieldElement>& b = std::nullopt);

/// First `length` coordinates of the vector representation of `a`.
std::vector<std::uint32_t> truncate(const FieldElement& a, std::size_t length);

// Elements are indexed lexicographically by coefficient vector with the
// constant coefficient as the most significant digit.
std::uint32_t element_index(const FieldSpec& spec, const FieldElement& a);
FieldElement element_at(const FieldSpec& spec, std::uint32_t index);

/// Mixed-radix helpers shared by every vector-valued domain (first entry most
/// significant).
std::vector<std::uint32_t> to_digits(std::uint64_t index, std::uint32_t base, std::size_t length);
std::uint64_t from_digits(const std::vector<std::uint32_t>& digits, std::uint32_t base);

/// "(a,b,c)" for vectors of length > 1, plain "a" for length 1.
std::string vector_label(const std::vector<std::uint32_t>& digits);

/// Index-level arithmetic with precomputed tables. Immutable after
/// construction and safe to share across threads.
class GaloisField {
 public:
  explicit GaloisField(FieldSpec spec);

  const FieldSpec& spec() const { return spec_; }
  std::uint32_t order() const { return order_; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return add_[a * order_ + b]; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return mul_[a * order_ + b]; }
  std::uint32_t neg(std::uint32_t a) const { return neg_[a]; }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }
  std::uint32_t inv(std::uint32_t a) const;

  std::uint32_t zero() const { return 0; }
  std::uint32_t one() const { return one_; }

  FieldElement element(std::uint32_t index) const { return element_at(spec_, index); }
  std::uint32_t index(const FieldElement& e) const { return element_index(spec_, e); }
  std::string label(std::uint32_t index) const;

 private:
  FieldSpec spec_;
  std::uint32_t order_;
  std::uint32_t one_;
  std::vector<std::uint32_t> add_;
  std::vector<std::uint32_t> mul_;
  std::vector<std::uint32_t> neg_;
  std::vector<std::uint32_t> inv_;
};

}  // namespace acfu
