#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <variant>
#include <vector>

namespace acfu {

/// Finite abelian group Z_{n_1} x ... x Z_{n_k}. Elements are indexed in
/// mixed radix with the first factor most significant, which matches the
/// lexicographic order of every vector-valued domain in this library.
struct AbelianGroup {
  std::vector<std::uint32_t> moduli;

  static AbelianGroup cyclic(std::uint32_t n) { return {{n}}; }
  static AbelianGroup elementary(std::uint32_t p, std::uint32_t dim) {
    return {std::vector<std::uint32_t>(dim, p)};
  }

  std::size_t size() const;
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t neg(std::uint32_t a) const;
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }
  bool operator==(const AbelianGroup&) const = default;
};

/// Dense |X| x |S| array of value indices.
struct FunctionTable {
  std::size_t x_size = 0;
  std::size_t s_size = 0;
  std::vector<std::uint32_t> entries;

  std::uint32_t at(std::size_t x, std::size_t s) const { return entries[x * s_size + s]; }
  bool operator==(const FunctionTable&) const = default;
};

/// Evaluation rule behind a family; implementations are immutable.
class HashRule {
 public:
  virtual ~HashRule() = default;
  virtual std::uint32_t value(std::size_t x, std::size_t s) const = 0;
};

/// A function f: X x S -> A over ordered, labelled finite domains.
class HashFamily {
 public:
  HashFamily(std::vector<std::string> x_labels, std::vector<std::string> s_labels,
             std::vector<std::string> a_labels, std::shared_ptr<const HashRule> rule,
             std::string descriptor);

  static HashFamily from_table(std::vector<std::string> x_labels, std::vector<std::string> s_labels,
                               std::vector<std::string> a_labels, FunctionTable table,
                               std::string descriptor = "table");

  std::size_t x_size() const { return x_labels_.size(); }
  std::size_t s_size() const { return s_labels_.size(); }
  std::size_t a_size() const { return a_labels_.size(); }

  const std::vector<std::string>& x_labels() const { return x_labels_; }
  const std::vector<std::string>& s_labels() const { return s_labels_; }
  const std::vector<std::string>& a_labels() const { return a_labels_; }

  /// Unchecked hot-path evaluation by index.
  std::uint32_t operator()(std::size_t x, std::size_t s) const { return rule_->value(x, s); }

  /// Checked evaluation; throws DomainError.
  std::uint32_t evaluate(std::size_t x, std::size_t s) const;
  const std::string& evaluate(const std::string& x_label, const std::string& s_label) const;

  std::size_t x_index(const std::string& label) const;
  std::size_t s_index(const std::string& label) const;

  const std::string& descriptor() const { return descriptor_; }

  const std::optional<AbelianGroup>& x_group() const { return x_group_; }
  const std::optional<AbelianGroup>& a_group() const { return a_group_; }
  HashFamily& with_groups(std::optional<AbelianGroup> x_group, std::optional<AbelianGroup> a_group);

  const std::vector<std::string>& annotations() const { return annotations_; }
  HashFamily& annotate(std::string note);

 private:
  std::vector<std::string> x_labels_;
  std::vector<std::string> s_labels_;
  std::vector<std::string> a_labels_;
  std::shared_ptr<const HashRule> rule_;
  std::string descriptor_;
  std::optional<AbelianGroup> x_group_;
  std::optional<AbelianGroup> a_group_;
  std::vector<std::string> annotations_;
};

// Closed-form families.
struct AffineSpec {
  std::uint32_t q;
  std::uint32_t t;
};
struct DualAffineSpec {
  std::uint32_t q;
  std::uint32_t t;
};
/// g(x, h) = sum_i h_i x_i with h over the normalized nonzero vectors; the
/// seed extension of this form is the affine family.
struct HyperplaneSpec {
  std::uint32_t q;
  std::uint32_t t;
};
struct TransversalSpec {
  std::uint32_t q;
  std::vector<std::uint32_t> h_subset;  // field element indices, strictly increasing
  bool include_infinity = false;
};
struct ToeplitzSpec {
  std::uint32_t q;
  std::uint32_t m;
  std::uint32_t n;
};
struct FieldMultiplySpec {
  std::uint32_t q;
  std::uint32_t n;
  std::uint32_t m;
  bool exclude_zero = false;
};

using FamilyDescriptor =
    std::variant<AffineSpec, DualAffineSpec, HyperplaneSpec, TransversalSpec, ToeplitzSpec, FieldMultiplySpec>;

std::string describe(const FamilyDescriptor& descriptor);

/// Throws UnsupportedParameters for anything outside the supported field sizes.
HashFamily build_named(const FamilyDescriptor& descriptor);

/// Normalized nonzero vectors of F_q^t (first nonzero coordinate equal to 1),
/// lexicographic, each as a vector of field element indices.
std::vector<std::vector<std::uint32_t>> normalized_vectors(std::uint32_t q, std::uint32_t t);

inline constexpr std::size_t kDefaultTableBudget = 10'000'000;

/// Exhaustive tabulation; throws BudgetExceeded when |X||S| > budget.
FunctionTable to_table(const HashFamily& f, std::size_t budget = kDefaultTableBudget);

/// Family backed by its own tabulation (labels, groups, annotations kept).
HashFamily tabulated(const HashFamily& f, std::size_t budget = kDefaultTableBudget);

/// Argument swap: transpose(f)(s, x) = f(x, s).
HashFamily transpose(const HashFamily& f);

/// f == g as functions on identical labelled domains.
bool same_function(const HashFamily& f, const HashFamily& g);

HashFamily constant_family(std::size_t x_size, std::size_t s_size, std::size_t a_size, std::uint32_t value);

/// Uniformly random table over index-labelled domains.
HashFamily random_family(std::size_t x_size, std::size_t s_size, std::size_t a_size, std::mt19937_64& rng);

std::vector<std::string> index_labels(std::size_t n);

/// Relabelling (point map, seed map) that carries the infinity-extended
/// transversal family with H = F_q onto dual_affine(q, 2):
/// transversal(x, s) == dual_affine(point_map[x], seed_map[s]).
struct Relabeling {
  std::vector<std::size_t> point_map;
  std::vector<std::size_t> seed_map;
};
Relabeling transversal_to_dual_affine(std::uint32_t q);

}  // namespace acfu
