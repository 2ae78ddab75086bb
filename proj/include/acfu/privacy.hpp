#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "acfu/hash_family.hpp"
#include "acfu/rational.hpp"

namespace acfu {

/// Exact joint distribution of (X, Z); every z has positive mass.
struct JointSource {
  std::vector<std::string> x_labels;
  std::vector<std::string> z_labels;
  std::vector<Rational> p;  // p[x * |Z| + z]
  std::vector<std::string> warnings;

  std::size_t x_size() const { return x_labels.size(); }
  std::size_t z_size() const { return z_labels.size(); }
  const Rational& at(std::size_t x, std::size_t z) const { return p[x * z_labels.size() + z]; }
};

/// Validates (nonnegative, total mass 1) and drops zero-mass z with a
/// warning. Throws DomainError.
JointSource make_source(std::vector<std::string> x_labels, std::vector<std::string> z_labels,
                        std::vector<Rational> p);

/// X uniform, Z constant.
JointSource uniform_source(std::vector<std::string> x_labels);
/// X uniform on q symbols; Z = X with probability 1 - flip, otherwise one of
/// the other q - 1 symbols uniformly.
JointSource symmetric_source(std::uint32_t q, const Rational& flip);

struct Renyi2 {
  Rational inner;  // sum_z p_z.p_z / p_z.j
  double bits = 0;  // -log2(inner)
};

Renyi2 renyi2_conditional(const JointSource& src);

/// n-fold product; points and side information become tuples "(a,b)".
/// Throws BudgetExceeded when |X|^n |Z|^n exceeds the budget.
JointSource iid_extend(const JointSource& src, std::uint32_t n, std::size_t budget = kDefaultTableBudget);

/// Exact p_ZSA for a uniform seed.
struct PAJoint {
  std::vector<std::string> z_labels;
  std::vector<std::string> s_labels;
  std::vector<std::string> a_labels;
  std::vector<Rational> p;  // p[(z * |S| + s) * |A| + a]
  std::vector<Rational> key_marginal;
  bool independent = false;  // p_ZA(z, a) = p_Z(z) / |A| everywhere
  std::optional<std::pair<std::size_t, std::size_t>> dependence_witness;  // (z, a)

  const Rational& at(std::size_t z, std::size_t s, std::size_t a) const {
    return p[(z * s_labels.size() + s) * a_labels.size() + a];
  }
};

/// Throws AlphabetMismatch unless the source's points equal f's points.
PAJoint pa_joint(const JointSource& src, const HashFamily& f, std::size_t budget = kDefaultTableBudget);

struct SecurityDistance {
  Rational l1;  // max over key pairs of the l1 distance of p_{ZS|A=a}
  double value = 0;
  std::optional<std::pair<std::size_t, std::size_t>> witness;
};

/// Throws ZeroMassKeyValue.
SecurityDistance security_distance(const PAJoint& joint);

struct TheoremBound {
  Rational radicand;  // (1 - eps) |A| inner + |A| eps - 1
  double value = 0;   // 2 sqrt(radicand)
};

/// Throws NegativeRadicand.
TheoremBound theorem_bound(const Rational& eps, std::size_t a_size, const Rational& renyi_inner);

/// p N_a N_a^T p <= (|S|/|A|)((1 - eps) p.p + eps (p.j)^2) for every member N_a.
bool bilinear_bound_holds(const HashFamily& f, const Rational& eps, const std::vector<Rational>& p);

struct PAResult {
  PAJoint joint;
  Renyi2 entropy;
  SecurityDistance distance;
  bool regular = false;
  std::optional<Rational> eps;  // eps_acfu of f when regular
  std::optional<TheoremBound> bound;
};

/// Assembles everything; throws TheoremViolation if distance^2 > 4 radicand.
PAResult run_pa(const JointSource& src, const HashFamily& f, std::size_t budget = kDefaultTableBudget);

}  // namespace acfu
