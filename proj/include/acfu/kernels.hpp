#pragma once

// Exhaustive counting kernels. Every kernel exists twice: `parallel::` is the
// OpenMP version used by the library, `serial::` is the straightforward
// reference kept for testing and benchmarking. Both return identical results:
// maxima are reduced with a lexicographically-smallest-tuple tie-break.

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "acfu/hash_family.hpp"
#include "acfu/rational.hpp"

namespace acfu::kernels {

/// Largest count over a set of argument tuples, with the lexicographically
/// smallest tuple attaining it. Unused tuple slots are zero.
struct MaxCount {
  std::uint64_t count = 0;
  std::array<std::uint32_t, 4> tuple{};
  bool found = false;

  /// True when (c, t) should replace the current best.
  bool improves(std::uint64_t c, const std::array<std::uint32_t, 4>& t) const {
    return !found || c > count || (c == count && t < tuple);
  }
  void offer(std::uint64_t c, const std::array<std::uint32_t, 4>& t) {
    if (improves(c, t)) {
      count = c;
      tuple = t;
      found = true;
    }
  }
  void merge(const MaxCount& other) {
    if (other.found) offer(other.count, other.tuple);
  }
  bool operator==(const MaxCount&) const = default;
};

/// Row-major 0/1 matrix.
struct BitMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::uint8_t> bits;

  std::uint8_t at(std::size_t r, std::size_t c) const { return bits[r * cols + c]; }
  bool operator==(const BitMatrix&) const = default;
};

/// histogram[k] = number of unordered pairs of distinct rows whose inner
/// product is k.
using PairHistogram = std::map<std::uint64_t, std::uint64_t>;

struct L1Max {
  Rational value;
  std::uint32_t first = 0;
  std::uint32_t second = 0;
  bool found = false;
};

namespace serial {

/// counts[x * a_size + alpha] = |{s : f(x,s) = alpha}|
std::vector<std::uint64_t> value_counts(const FunctionTable& t, std::size_t a_size);
/// AU: max over x < x' of |{s : f(x,s) = f(x',s)}|, tuple (x, x').
MaxCount max_collisions(const FunctionTable& t);
/// ACFU: max over x < x', alpha of |{s : f(x,s) = f(x',s) = alpha}|.
MaxCount max_value_collisions(const FunctionTable& t, std::size_t a_size);
/// ASU: max over x < x', alpha, alpha' of |{s : f(x,s) = alpha, f(x',s) = alpha'}|.
MaxCount max_joint_values(const FunctionTable& t, std::size_t a_size);
/// max over x != skip_row, alpha of |{s : f(x,s) = alpha}|, tuple (x, alpha).
MaxCount max_fiber(const FunctionTable& t, std::size_t a_size, std::size_t skip_row);
/// max over y < y', beta of |{h : a(y,h) - a(y',h) = beta}|, tuple (y, y', beta).
MaxCount max_difference_fiber(const FunctionTable& t, const AbelianGroup& a_group);
PairHistogram row_inner_products(const BitMatrix& m);
/// max over first < second of the l1 distance between two rows of `dists`.
L1Max max_l1_distance(const std::vector<std::vector<Rational>>& dists);

}  // namespace serial

namespace parallel {

std::vector<std::uint64_t> value_counts(const FunctionTable& t, std::size_t a_size);
MaxCount max_collisions(const FunctionTable& t);
MaxCount max_value_collisions(const FunctionTable& t, std::size_t a_size);
MaxCount max_joint_values(const FunctionTable& t, std::size_t a_size);
MaxCount max_fiber(const FunctionTable& t, std::size_t a_size, std::size_t skip_row);
MaxCount max_difference_fiber(const FunctionTable& t, const AbelianGroup& a_group);
PairHistogram row_inner_products(const BitMatrix& m);
L1Max max_l1_distance(const std::vector<std::vector<Rational>>& dists);

}  // namespace parallel

/// Worker threads used by `parallel::` kernels (0 = OpenMP default).
void set_thread_count(int threads);

}  // namespace acfu::kernels
