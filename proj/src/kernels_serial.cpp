#include "acfu/kernels.hpp"

namespace acfu::kernels::serial {

std::vector<std::uint64_t> value_counts(const FunctionTable& t, std::size_t a_size) {
  std::vector<std::uint64_t> counts(t.x_size * a_size, 0);
  for (std::size_t x = 0; x < t.x_size; ++x) {
    for (std::size_t s = 0; s < t.s_size; ++s) ++counts[x * a_size + t.at(x, s)];
  }
  return counts;
}

MaxCount max_collisions(const FunctionTable& t) {
  MaxCount best;
  for (std::size_t x = 0; x < t.x_size; ++x) {
    for (std::size_t y = x + 1; y < t.x_size; ++y) {
      std::uint64_t c = 0;
      for (std::size_t s = 0; s < t.s_size; ++s) c += t.at(x, s) == t.at(y, s);
      best.offer(c, {static_cast<std::uint32_t>(x), static_cast<std::uint32_t>(y), 0, 0});
    }
  }
  return best;
}

MaxCount max_value_collisions(const FunctionTable& t, std::size_t a_size) {
  MaxCount best;
  std::vector<std::uint64_t> per_value(a_size);
  for (std::size_t x = 0; x < t.x_size; ++x) {
    for (std::size_t y = x + 1; y < t.x_size; ++y) {
      std::fill(per_value.begin(), per_value.end(), 0);
      for (std::size_t s = 0; s < t.s_size; ++s) {
        if (t.at(x, s) == t.at(y, s)) ++per_value[t.at(x, s)];
      }
      for (std::size_t a = 0; a < a_size; ++a) {
        best.offer(per_value[a],
                   {static_cast<std::uint32_t>(x), static_cast<std::uint32_t>(y), static_cast<std::uint32_t>(a), 0});
      }
    }
  }
  return best;
}

MaxCount max_joint_values(const FunctionTable& t, std::size_t a_size) {
  MaxCount best;
  std::vector<std::uint64_t> joint(a_size * a_size);
  for (std::size_t x = 0; x < t.x_size; ++x) {
    for (std::size_t y = x + 1; y < t.x_size; ++y) {
      std::fill(joint.begin(), joint.end(), 0);
      for (std::size_t s = 0; s < t.s_size; ++s) ++joint[t.at(x, s) * a_size + t.at(y, s)];
      for (std::size_t a = 0; a < a_size; ++a) {
        for (std::size_t b = 0; b < a_size; ++b) {
          best.offer(joint[a * a_size + b], {static_cast<std::uint32_t>(x), static_cast<std::uint32_t>(y),
                                             static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b)});
        }
      }
    }
  }
  return best;
}

MaxCount max_fiber(const FunctionTable& t, std::size_t a_size, std::size_t skip_row) {
  MaxCount best;
  const auto counts = value_counts(t, a_size);
  for (std::size_t x = 0; x < t.x_size; ++x) {
    if (x == skip_row) continue;
    for (std::size_t a = 0; a < a_size; ++a) {
      best.offer(counts[x * a_size + a], {static_cast<std::uint32_t>(x), static_cast<std::uint32_t>(a), 0, 0});
    }
  }
  return best;
}

MaxCount max_difference_fiber(const FunctionTable& t, const AbelianGroup& a_group) {
  MaxCount best;
  const std::size_t a_size = a_group.size();
  std::vector<std::uint64_t> per_diff(a_size);
  for (std::size_t x = 0; x < t.x_size; ++x) {
    for (std::size_t y = x + 1; y < t.x_size; ++y) {
      std::fill(per_diff.begin(), per_diff.end(), 0);
      for (std::size_t s = 0; s < t.s_size; ++s) ++per_diff[a_group.sub(t.at(x, s), t.at(y, s))];
      for (std::size_t b = 0; b < a_size; ++b) {
        best.offer(per_diff[b],
                   {static_cast<std::uint32_t>(x), static_cast<std::uint32_t>(y), static_cast<std::uint32_t>(b), 0});
      }
    }
  }
  return best;
}

PairHistogram row_inner_products(const BitMatrix& m) {
  PairHistogram hist;
  for (std::size_t i = 0; i < m.rows; ++i) {
    for (std::size_t j = i + 1; j < m.rows; ++j) {
      std::uint64_t c = 0;
      for (std::size_t k = 0; k < m.cols; ++k) c += m.at(i, k) & m.at(j, k);
      ++hist[c];
    }
  }
  return hist;
}

L1Max max_l1_distance(const std::vector<std::vector<Rational>>& dists) {
  L1Max best;
  for (std::size_t i = 0; i < dists.size(); ++i) {
    for (std::size_t j = i + 1; j < dists.size(); ++j) {
      Rational d = 0;
      for (std::size_t k = 0; k < dists[i].size(); ++k) d += abs(dists[i][k] - dists[j][k]);
      if (!best.found || d > best.value) {
        best = {d, static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j), true};
      }
    }
  }
  return best;
}

}  // namespace acfu::kernels::serial
