#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "acfu/hash_family.hpp"
#include "acfu/rational.hpp"

namespace acfu {

enum class HashClass { AU, ACFU, ASU, Balanced };

std::string_view to_string(HashClass c);

/// Least epsilon for which the class inequality holds, as max count over the
/// class normalizer. `witness` is the lexicographically smallest argument
/// tuple attaining the maximum: (x, x') for AU, (x, x', alpha) for ACFU,
/// (x, x', alpha, alpha') for ASU and (x, alpha) for BALANCED. It is absent
/// when there is nothing to maximize over (|X| = 1).
struct EpsilonResult {
  Rational eps;
  std::uint64_t max_count = 0;
  std::optional<std::vector<std::uint32_t>> witness;
};

struct RegularityResult {
  bool regular = false;
  std::optional<std::uint64_t> block_size;
  std::size_t a_size = 0;
  /// counts[x * a_size + alpha] = |{s : f(x,s) = alpha}|
  std::vector<std::uint64_t> counts;
};

RegularityResult regularity_check(const HashFamily& f);
RegularityResult regularity_check(const FunctionTable& t, std::size_t a_size);

/// Throws NotRegular (ACFU/ASU on an irregular f) and NotHomomorphic
/// (BALANCED without group structures or with f not additive in x).
EpsilonResult min_epsilon(const HashFamily& f, HashClass c);
EpsilonResult min_epsilon(const HashFamily& f, const FunctionTable& table, HashClass c);

/// f(x + y, s) = f(x, s) + f(y, s) for all arguments; false without groups.
bool is_homomorphism(const HashFamily& f);

/// Least eps with |{h : a(y,h) - a(y',h) = beta}| <= eps |H| for all y != y',
/// beta. Needs a group structure on the value set.
EpsilonResult balanced_epsilon(const HashFamily& a);

/// (|X| - |A|) / (|A| (|X| - 1)); throws TrivialDomain unless |X| > |A| >= 2.
Rational optimal_epsilon(std::uint64_t x_size, std::uint64_t a_size);

/// Nonemptiness of the interval on which the variance bound beats |A|/eps,
/// decided on integers: |X| >= (|A|/2)(|A| + sqrt((|A|+3)(|A|-1)) + 1).
bool variance_regime_nonempty(std::uint64_t x_size, std::uint64_t a_size);

struct BoundEqualities {
  bool variance = false;
  bool simple = false;
  bool ocfu = false;
  bool au = false;
  bool asu_variance = false;
  bool asu_simple = false;
};

/// Seed-size lower bounds for given |X|, |A| and epsilon.
struct BoundReport {
  std::uint64_t x_size = 0;
  std::uint64_t a_size = 0;
  Rational eps;
  Rational optimal_eps;

  std::optional<Rational> lb_variance;      // ACFU, variance method
  std::optional<Rational> lb_simple;        // ACFU, |A| / eps
  std::optional<Rational> lb_ocfu;          // only at optimal eps
  std::optional<Rational> lb_au;            // AU, variance method
  std::optional<Rational> lb_asu_variance;  // ASU, variance method, eps >= 1/|A|
  std::optional<Rational> lb_asu_simple;    // ASU, |A| / eps, eps >= 1/|A|

  /// The variance bound applies iff eps <= (|X| - |A|^2) / (|X| - |A|).
  Rational variance_threshold;
  bool variance_applies = false;
  bool variance_regime_nonempty = false;
  /// |A|/eps dominates the ASU variance bound iff eps >= (|X| - |A|) / (|X| - 1).
  Rational asu_crossover;
  bool asu_simple_dominates = false;

  std::vector<std::string> notes;

  BoundEqualities equalities(std::uint64_t s_size) const;
};

/// Throws TrivialDomain or InfeasibleEpsilon (eps outside [optimal, 1]).
BoundReport seed_lower_bounds(std::uint64_t x_size, std::uint64_t a_size, const Rational& eps);

struct VerificationReport {
  std::size_t x_size = 0;
  std::size_t s_size = 0;
  std::size_t a_size = 0;
  bool regular = false;
  std::optional<std::uint64_t> block_size;

  EpsilonResult eps_au;
  std::optional<EpsilonResult> eps_acfu;  // absent: NotRegular
  std::optional<EpsilonResult> eps_asu;   // absent: NotRegular
  std::optional<EpsilonResult> eps_balanced;
  std::string balanced_status;  // why eps_balanced is absent, empty otherwise

  bool nontrivial = false;
  std::optional<Rational> optimal_eps;
  bool ocfu = false;
  bool ou = false;

  // Bounds at eps_acfu, eps_au and eps_asu respectively, with |S| compared
  // against each.
  std::optional<BoundReport> bounds_acfu;
  std::optional<BoundReport> bounds_au;
  std::optional<BoundReport> bounds_asu;
  BoundEqualities equal;
};

VerificationReport classify(const HashFamily& f, std::size_t budget = kDefaultTableBudget);

}  // namespace acfu
