#include <omp.h>

#include <algorithm>

#include "acfu/kernels.hpp"

namespace acfu::kernels {

void set_thread_count(int threads) {
  if (threads > 0) omp_set_num_threads(threads);
}

namespace parallel {
namespace {

// Runs body(x, local_best) over every first-argument row, one thread-local
// maximum per thread, merged under the (count, tuple) total order.
template <typename Body>
MaxCount reduce_rows(std::size_t rows, Body body) {
  MaxCount best;
  const auto n = static_cast<std::int64_t>(rows);
#pragma omp parallel
  {
    MaxCount local;
#pragma omp for schedule(dynamic)
    for (std::int64_t x = 0; x < n; ++x) body(static_cast<std::size_t>(x), local);
#pragma omp critical
    best.merge(local);
  }
  return best;
}

}  // namespace

std::vector<std::uint64_t> value_counts(const FunctionTable& t, std::size_t a_size) {
  std::vector<std::uint64_t> counts(t.x_size * a_size, 0);
  const auto n = static_cast<std::int64_t>(t.x_size);
#pragma omp parallel for
  for (std::int64_t x = 0; x < n; ++x) {
    const auto row = static_cast<std::size_t>(x);
    for (std::size_t s = 0; s < t.s_size; ++s) ++counts[row * a_size + t.at(row, s)];
  }
  return counts;
}

MaxCount max_collisions(const FunctionTable& t) {
  return reduce_rows(t.x_size, [&](std::size_t x, MaxCount& local) {
    for (std::size_t y = x + 1; y < t.x_size; ++y) {
      std::uint64_t c = 0;
      for (std::size_t s = 0; s < t.s_size; ++s) c += t.at(x, s) == t.at(y, s);
      local.offer(c, {static_cast<std::uint32_t>(x), static_cast<std::uint32_t>(y), 0, 0});
    }
  });
}

MaxCount max_value_collisions(const FunctionTable& t, std::size_t a_size) {
  return reduce_rows(t.x_size, [&](std::size_t x, MaxCount& local) {
    std::vector<std::uint64_t> per_value(a_size);
    for (std::size_t y = x + 1; y < t.x_size; ++y) {
      std::fill(per_value.begin(), per_value.end(), 0);
      for (std::size_t s = 0; s < t.s_size; ++s) {
        if (t.at(x, s) == t.at(y, s)) ++per_value[t.at(x, s)];
      }
      for (std::size_t a = 0; a < a_size; ++a) {
        local.offer(per_value[a],
                    {static_cast<std::uint32_t>(x), static_cast<std::uint32_t>(y), static_cast<std::uint32_t>(a), 0});
      }
    }
  });
}

MaxCount max_joint_values(const FunctionTable& t, std::size_t a_size) {
  return reduce_rows(t.x_size, [&](std::size_t x, MaxCount& local) {
    std::vector<std::uint64_t> joint(a_size * a_size);
    for (std::size_t y = x + 1; y < t.x_size; ++y) {
      std::fill(joint.begin(), joint.end(), 0);
      for (std::size_t s = 0; s < t.s_size; ++s) ++joint[t.at(x, s) * a_size + t.at(y, s)];
      for (std::size_t a = 0; a < a_size; ++a) {
        for (std::size_t b = 0; b < a_size; ++b) {
          local.offer(joint[a * a_size + b], {static_cast<std::uint32_t>(x), static_cast<std::uint32_t>(y),
                                              static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b)});
        }
      }
    }
  });
}

MaxCount max_fiber(const FunctionTable& t, std::size_t a_size, std::size_t skip_row) {
  return reduce_rows(t.x_size, [&](std::size_t x, MaxCount& local) {
    if (x == skip_row) return;
    std::vector<std::uint64_t> per_value(a_size, 0);
    for (std::size_t s = 0; s < t.s_size; ++s) ++per_value[t.at(x, s)];
    for (std::size_t a = 0; a < a_size; ++a) {
      local.offer(per_value[a], {static_cast<std::uint32_t>(x), static_cast<std::uint32_t>(a), 0, 0});
    }
  });
}

MaxCount max_difference_fiber(const FunctionTable& t, const AbelianGroup& a_group) {
  const std::size_t a_size = a_group.size();
  return reduce_rows(t.x_size, [&](std::size_t x, MaxCount& local) {
    std::vector<std::uint64_t> per_diff(a_size);
    for (std::size_t y = x + 1; y < t.x_size; ++y) {
      std::fill(per_diff.begin(), per_diff.end(), 0);
      for (std::size_t s = 0; s < t.s_size; ++s) ++per_diff[a_group.sub(t.at(x, s), t.at(y, s))];
      for (std::size_t b = 0; b < a_size; ++b) {
        local.offer(per_diff[b],
                    {static_cast<std::uint32_t>(x), static_cast<std::uint32_t>(y), static_cast<std::uint32_t>(b), 0});
      }
    }
  });
}

PairHistogram row_inner_products(const BitMatrix& m) {
  PairHistogram hist;
  const auto n = static_cast<std::int64_t>(m.rows);
#pragma omp parallel
  {
    PairHistogram local;
#pragma omp for schedule(dynamic)
    for (std::int64_t ii = 0; ii < n; ++ii) {
      const auto i = static_cast<std::size_t>(ii);
      for (std::size_t j = i + 1; j < m.rows; ++j) {
        std::uint64_t c = 0;
        for (std::size_t k = 0; k < m.cols; ++k) c += m.at(i, k) & m.at(j, k);
        ++local[c];
      }
    }
#pragma omp critical
    for (const auto& [k, v] : local) hist[k] += v;
  }
  return hist;
}

L1Max max_l1_distance(const std::vector<std::vector<Rational>>& dists) {
  L1Max best;
  const auto n = static_cast<std::int64_t>(dists.size());
#pragma omp parallel
  {
    L1Max local;
#pragma omp for schedule(dynamic)
    for (std::int64_t ii = 0; ii < n; ++ii) {
      const auto i = static_cast<std::size_t>(ii);
      for (std::size_t j = i + 1; j < dists.size(); ++j) {
        Rational d = 0;
        for (std::size_t k = 0; k < dists[i].size(); ++k) d += abs(dists[i][k] - dists[j][k]);
        if (!local.found || d > local.value) local = {d, static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j), true};
      }
    }
#pragma omp critical
    {
      const bool better = local.found &&
                          (!best.found || local.value > best.value ||
                           (local.value == best.value &&
                            std::pair(local.first, local.second) < std::pair(best.first, best.second)));
      if (better) best = local;
    }
  }
  return best;
}

}  // namespace parallel
}  // namespace acfu::kernels
