#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "acfu/hash_family.hpp"
#include "acfu/rational.hpp"

namespace acfu {

/// Latin square L on a labelled carrier; the product is a o b = L[a][b].
class Quasigroup {
 public:
  /// Throws NotLatinSquare.
  static Quasigroup from_table(std::vector<std::vector<std::uint32_t>> table, std::vector<std::string> labels);
  static Quasigroup cyclic(std::uint32_t n);
  static Quasigroup cyclic(std::vector<std::string> labels);
  /// Additive group of F_p^m, labelled like vectors over F_p.
  static Quasigroup elementary(std::uint32_t p, std::uint32_t m);
  static Quasigroup from_group(const AbelianGroup& group, std::vector<std::string> labels);
  /// Cyclic square with independently permuted rows, columns and symbols.
  static Quasigroup random(std::vector<std::string> labels, std::mt19937_64& rng);

  std::size_t order() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<std::vector<std::uint32_t>>& table() const { return table_; }

  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return table_[a][b]; }
  /// The unique c with c o b = a.
  std::uint32_t rdiv(std::uint32_t a, std::uint32_t b) const { return division_[a][b]; }

 private:
  Quasigroup(std::vector<std::vector<std::uint32_t>> table, std::vector<std::string> labels);

  std::vector<std::vector<std::uint32_t>> table_;
  std::vector<std::vector<std::uint32_t>> division_;
  std::vector<std::string> labels_;
};

/// g^(x; h, b) = g(x, h) o b, seeds H x A with index h |A| + b.
/// Throws CarrierMismatch unless g's value labels equal Q's.
HashFamily seed_extension(const HashFamily& g, const Quasigroup& q);

/// g^(y, b; s) = g(y, s) o b, points Y x A with index y |A| + b. An
/// irregular g is accepted and the result carries an annotation.
HashFamily point_extension(const HashFamily& g, const Quasigroup& q);

/// f(x; s1, s2) = f2(f1(x, s1), s2), seeds S1 x S2 with index s1 |S2| + s2.
/// Throws DomainMismatch unless f1's value labels equal f2's point labels.
HashFamily concatenate(const HashFamily& f1, const HashFamily& f2);

/// eps_asu(f1) eps_acfu(f2) (|A1| - 1) + eps_asu(f1); absent when either
/// input is irregular.
std::optional<Rational> concatenation_bound(const HashFamily& f1, const HashFamily& f2);

struct LiftResult {
  HashFamily family;
  Rational eps;  // balancedness of the input, an ASU bound for the lift
};

/// Seed extension by the value group of a homomorphic, eps-balanced g.
/// eps defaults to the measured balancedness. Throws NotHomomorphic,
/// NotBalanced (measured above the requested eps) and TheoremViolation.
LiftResult krawczyk_lift(const HashFamily& g, std::optional<Rational> eps = std::nullopt);

struct DoubleExtension {
  HashFamily family;  // f(y, b; h, c) = a(y, h) + b + c
  HashFamily g1;      // a(y, h) + b, whose seed extension is f
  HashFamily g2;      // a(y, h) + c, whose point extension is f
  Rational eps;
};

/// Needs a group on the value set and balancedness at most eps (defaults to
/// the measured value). Throws NotBalanced.
DoubleExtension double_extension(const HashFamily& a, std::optional<Rational> eps = std::nullopt);

}  // namespace acfu
