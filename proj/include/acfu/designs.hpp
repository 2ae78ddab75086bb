#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "acfu/hash_family.hpp"
#include "acfu/kernels.hpp"
#include "acfu/rational.hpp"

namespace acfu {

/// Points x blocks 0/1 matrix; rows are points, columns are block indices.
struct IncidenceStructure {
  std::vector<std::string> points;
  std::vector<std::string> blocks;
  kernels::BitMatrix matrix;

  std::size_t v() const { return points.size(); }
  std::size_t b() const { return blocks.size(); }
  bool at(std::size_t x, std::size_t s) const { return matrix.at(x, s) != 0; }

  /// Throws DomainError on shape mismatch or entries outside {0,1}.
  static IncidenceStructure from_rows(std::vector<std::string> points, std::vector<std::string> blocks,
                                      const std::vector<std::vector<int>>& rows);
  bool operator==(const IncidenceStructure&) const = default;
};

/// Swap points and blocks.
IncidenceStructure transpose(const IncidenceStructure& d);

/// Incidence structures D_alpha on common points and blocks whose matrices
/// partition the all-ones matrix.
struct Mosaic {
  std::vector<std::string> a_labels;
  std::vector<IncidenceStructure> members;
};

/// Throws NotAMosaic if shapes differ or some entry is not covered exactly once.
void validate_mosaic(const Mosaic& m);

Mosaic mosaic_from_function(const HashFamily& f, std::size_t budget = kDefaultTableBudget);
HashFamily function_from_mosaic(const Mosaic& m);
Mosaic dual_mosaic(const Mosaic& m);
/// Block indices S x A, index s * |A| + alpha, labelled "(s,alpha)".
IncidenceStructure sum_mosaic(const Mosaic& m);

struct DesignParams {
  std::size_t v = 0;
  std::size_t b = 0;
  std::optional<std::uint64_t> k;
  std::optional<std::uint64_t> r;
  std::optional<std::uint64_t> lambda;
  bool bibd = false;
  /// pair_counts[c] = number of unordered point pairs lying in exactly c blocks.
  std::map<std::uint64_t, std::uint64_t> pair_counts;
  /// Sizes of intersections of distinct blocks.
  std::set<std::uint64_t> intersection_numbers;
  bool quasi_symmetric = false;  // BIBD with exactly two intersection numbers
  bool symmetric = false;        // BIBD with a single intersection number
  std::optional<bool> eq_bk_vr;          // bk = vr, when k and r are constant
  std::optional<bool> eq_lambda;         // lambda (v-1) = r (k-1), for BIBDs
  std::optional<bool> eq_affine_count;   // b = v + r - 1, for BIBDs
  /// Points split into classes of equal size: same-class pairs in no block,
  /// cross-class pairs in a constant positive number of blocks.
  std::optional<std::vector<std::vector<std::size_t>>> point_classes;
};

DesignParams analyze_structure(const IncidenceStructure& d);

/// Parallel classes as lists of block indices; every class covers each point once.
struct Resolution {
  std::vector<std::vector<std::size_t>> classes;
  bool operator==(const Resolution&) const = default;
};

bool is_resolution(const IncidenceStructure& d, const Resolution& res);

struct ResolutionSearch {
  std::optional<Resolution> resolution;
  std::string reason;  // why no resolution exists, when absent
  std::uint64_t nodes = 0;
};

inline constexpr std::uint64_t kDefaultSearchBudget = 1'000'000;

/// Exact-cover backtracking; the first resolution in block-index order.
/// Throws SearchBudgetExceeded.
ResolutionSearch find_resolution(const IncidenceStructure& d, std::uint64_t node_budget = kDefaultSearchBudget);

/// labeling[h][i] is the value index of block res.classes[h][i]; each class
/// must carry every value exactly once (BadLabeling otherwise). Seeds are the
/// parallel classes.
Mosaic mosaic_from_resolution(const IncidenceStructure& d, const Resolution& res,
                              const std::vector<std::vector<std::uint32_t>>& labeling,
                              std::vector<std::string> a_labels);

/// Labels each class by the position of its blocks.
std::vector<std::vector<std::uint32_t>> canonical_labeling(const Resolution& res);

/// Invariant of the matrix under row and column permutations.
kernels::BitMatrix canonical_form(const IncidenceStructure& d, std::uint64_t node_budget = 10'000'000);
bool isomorphic(const IncidenceStructure& a, const IncidenceStructure& b);

struct TheoremCheck {
  std::string name;
  bool holds = false;
  std::string detail;
};

struct TheoremReport {
  std::vector<TheoremCheck> checks;  // only the implications whose premise holds
  bool all_hold() const;
};

TheoremReport check_structure_theorems(const HashFamily& f, std::size_t budget = kDefaultTableBudget);

}  // namespace acfu
