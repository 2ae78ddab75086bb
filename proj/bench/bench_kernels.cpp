// Serial reference kernels against their OpenMP counterparts.
// Usage: bench_kernels [threads]

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>

#include "acfu/hash_family.hpp"
#include "acfu/kernels.hpp"

namespace {

double seconds(const std::function<void()>& body) {
  const auto start = std::chrono::steady_clock::now();
  body();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

template <typename Serial, typename Parallel>
void compare(const std::string& name, Serial serial, Parallel parallel) {
  decltype(serial()) a{}, b{};
  const double ts = seconds([&] { a = serial(); });
  const double tp = seconds([&] { b = parallel(); });
  std::cout << std::left << std::setw(28) << name << std::right << std::fixed << std::setprecision(4) << std::setw(10)
            << ts << std::setw(10) << tp << std::setw(9) << std::setprecision(2) << (tp > 0 ? ts / tp : 0.0)
            << (a == b ? "   same" : "   DIFFERENT") << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  using namespace acfu;
  if (argc > 1) kernels::set_thread_count(std::atoi(argv[1]));

  const auto affine = to_table(build_named(AffineSpec{8, 3}));
  std::mt19937_64 rng(7);
  const auto random = to_table(random_family(400, 400, 4, rng));
  const auto group = AbelianGroup::cyclic(4);

  std::cout << "kernel                        serial[s] omp[s]   speedup\n";
  for (const auto* t : {&affine, &random}) {
    const std::string tag = t == &affine ? "affine(8,3) " : "random 400^2 ";
    const std::size_t a = t == &affine ? 8 : 4;
    compare(tag + "collisions", [&] { return kernels::serial::max_collisions(*t); },
            [&] { return kernels::parallel::max_collisions(*t); });
    compare(tag + "value coll.", [&] { return kernels::serial::max_value_collisions(*t, a); },
            [&] { return kernels::parallel::max_value_collisions(*t, a); });
    compare(tag + "joint values", [&] { return kernels::serial::max_joint_values(*t, a); },
            [&] { return kernels::parallel::max_joint_values(*t, a); });
  }
  compare("random 400^2 differences", [&] { return kernels::serial::max_difference_fiber(random, group); },
          [&] { return kernels::parallel::max_difference_fiber(random, group); });

  kernels::BitMatrix m{300, 600, std::vector<std::uint8_t>(300 * 600)};
  std::bernoulli_distribution coin(0.3);
  for (auto& bit : m.bits) bit = coin(rng);
  compare("inner products 300x600", [&] { return kernels::serial::row_inner_products(m); },
          [&] { return kernels::parallel::row_inner_products(m); });
  return 0;
}
