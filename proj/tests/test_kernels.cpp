#include <doctest.h>

#include <random>

#include "acfu/hash_family.hpp"
#include "acfu/kernels.hpp"
#include "builtins.hpp"

using namespace acfu;
namespace ser = acfu::kernels::serial;
namespace par = acfu::kernels::parallel;

namespace {

void compare_tables(const FunctionTable& t, std::size_t as, const std::optional<AbelianGroup>& group) {
  CHECK(ser::value_counts(t, as) == par::value_counts(t, as));
  CHECK(ser::max_collisions(t) == par::max_collisions(t));
  CHECK(ser::max_value_collisions(t, as) == par::max_value_collisions(t, as));
  CHECK(ser::max_joint_values(t, as) == par::max_joint_values(t, as));
  CHECK(ser::max_fiber(t, as, 0) == par::max_fiber(t, as, 0));
  if (group) CHECK(ser::max_difference_fiber(t, *group) == par::max_difference_fiber(t, *group));

  kernels::BitMatrix m{t.x_size, t.s_size, std::vector<std::uint8_t>(t.x_size * t.s_size)};
  for (std::size_t i = 0; i < t.entries.size(); ++i) m.bits[i] = t.entries[i] == 0;
  CHECK(ser::row_inner_products(m) == par::row_inner_products(m));
}

}  // namespace

TEST_CASE("parallel kernels match the serial reference") {
  for (int threads : {1, 3}) {
    kernels::set_thread_count(threads);
    for (const auto& d : testing::small_builtins()) {
      const auto f = build_named(d);
      CAPTURE(f.descriptor());
      compare_tables(to_table(f), f.a_size(), f.a_group());
    }
    std::mt19937_64 rng(5);
    for (int i = 0; i < 30; ++i) {
      const std::size_t xs = 1 + rng() % 40, ss = 1 + rng() % 40, as = 1 + rng() % 5;
      const auto f = random_family(xs, ss, as, rng);
      compare_tables(to_table(f), as, AbelianGroup::cyclic(static_cast<std::uint32_t>(as)));
    }
  }
  kernels::set_thread_count(0);
}

TEST_CASE("parallel l1 maximum matches the serial reference") {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 20; ++i) {
    const std::size_t n = 1 + rng() % 6, len = 1 + rng() % 10;
    std::vector<std::vector<Rational>> dists(n, std::vector<Rational>(len));
    for (auto& row : dists) {
      for (auto& v : row) v = Rational(static_cast<long>(rng() % 5), 4);
    }
    const auto a = ser::max_l1_distance(dists), b = par::max_l1_distance(dists);
    CHECK(a.found == b.found);
    CHECK(a.value == b.value);
    CHECK(a.first == b.first);
    CHECK(a.second == b.second);
  }
}

TEST_CASE("tie break picks the lexicographically smallest tuple") {
  FunctionTable t{3, 2, {0, 0, 0, 0, 0, 0}};
  const auto m = par::max_collisions(t);
  CHECK(m.count == 2);
  CHECK(m.tuple[0] == 0);
  CHECK(m.tuple[1] == 1);
}
