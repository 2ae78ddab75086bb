#include <doctest.h>

#include "acfu/hash_family.hpp"
#include "support.hpp"

using namespace acfu;
using testing::thrown_code;

namespace {

HashFamily transversal_full(std::uint32_t q, bool infinity = false) {
  std::vector<std::uint32_t> h(q);
  for (std::uint32_t i = 0; i < q; ++i) h[i] = i;
  return build_named(TransversalSpec{q, h, infinity});
}

}  // namespace

TEST_CASE("closed-form evaluations") {
  const auto affine = build_named(AffineSpec{2, 2});
  CHECK(affine.evaluate("(1,1)", "((1,0),1)") == "0");

  const auto tr = transversal_full(3);
  CHECK(tr.evaluate("(1,2)", "(1,1)") == "2");

  const auto tri = transversal_full(3, true);
  CHECK(tri.x_size() == 12);
  CHECK(tri.evaluate("(inf,1)", "(2,0)") == "0");  // s1 + y = 2 + 1

  for (std::size_t x = 0; x < affine.x_size(); ++x) {
    for (std::size_t s = 0; s < affine.s_size(); ++s) CHECK(affine.evaluate(x, s) == affine.evaluate(x, s));
  }
}

TEST_CASE("domain sizes") {
  const auto affine = build_named(AffineSpec{2, 2});
  CHECK(affine.x_size() == 4);
  CHECK(affine.s_size() == 6);
  CHECK(affine.a_size() == 2);

  const auto tr = transversal_full(3);
  CHECK(tr.x_size() == 9);
  CHECK(tr.s_size() == 9);
  CHECK(tr.a_size() == 3);

  const auto fm = build_named(FieldMultiplySpec{2, 3, 1, true});
  CHECK(fm.x_size() == 8);
  CHECK(fm.s_size() == 7);
  CHECK(fm.a_size() == 2);

  CHECK(normalized_vectors(3, 2).size() == 4);
  CHECK(normalized_vectors(2, 3).front() == std::vector<std::uint32_t>{0, 0, 1});
  CHECK(thrown_code([] { build_named(AffineSpec{6, 2}); }) == ErrorCode::UnsupportedParameters);
}

TEST_CASE("tabulation") {
  const auto t = to_table(build_named(AffineSpec{2, 2}));
  CHECK(t.x_size == 4);
  CHECK(t.s_size == 6);
  for (std::size_t x = 0; x < 4; ++x) {
    int ones = 0;
    for (std::size_t s = 0; s < 6; ++s) ones += t.at(x, s);
    CHECK(ones == 3);
  }
  const auto c = to_table(constant_family(2, 2, 3, 1));
  CHECK(c.entries == std::vector<std::uint32_t>(4, 1));
  CHECK(thrown_code([] { to_table(build_named(AffineSpec{2, 3}), 10); }) == ErrorCode::BudgetExceeded);
}

TEST_CASE("affine blocks have size (q^t - 1)/(q - 1)") {
  for (auto [q, t] : {std::pair{2u, 2u}, {3u, 2u}, {2u, 3u}, {4u, 2u}, {5u, 2u}}) {
    const auto f = build_named(AffineSpec{q, t});
    const auto tab = to_table(f);
    std::size_t expected = (f.x_size() - 1) / (q - 1);
    for (std::size_t x = 0; x < f.x_size(); ++x) {
      std::vector<std::size_t> counts(q);
      for (std::size_t s = 0; s < f.s_size(); ++s) ++counts[tab.at(x, s)];
      for (auto c : counts) CHECK(c == expected);
    }
  }
}

TEST_CASE("transversal point classes never collide") {
  for (std::uint32_t q : {2u, 3u, 4u, 5u}) {
    const auto f = transversal_full(q);
    for (std::size_t h = 0; h < q; ++h) {
      for (std::size_t y = 0; y < q; ++y) {
        for (std::size_t y2 = y + 1; y2 < q; ++y2) {
          for (std::size_t s = 0; s < f.s_size(); ++s) CHECK(f(h * q + y, s) != f(h * q + y2, s));
        }
      }
    }
  }
}

TEST_CASE("dual affine is the argument swap of affine") {
  for (auto [q, t] : {std::pair{2u, 2u}, {3u, 2u}, {2u, 3u}}) {
    const auto f = build_named(AffineSpec{q, t});
    const auto d = build_named(DualAffineSpec{q, t});
    CHECK(same_function(transpose(f), d));
  }
}

TEST_CASE("transversal with infinity relabels to dual affine") {
  for (std::uint32_t q : {2u, 3u, 4u}) {
    const auto tr = transversal_full(q, true);
    const auto da = build_named(DualAffineSpec{q, 2});
    const auto map = transversal_to_dual_affine(q);
    REQUIRE(map.point_map.size() == tr.x_size());
    bool same = true;
    for (std::size_t x = 0; x < tr.x_size(); ++x) {
      for (std::size_t s = 0; s < tr.s_size(); ++s) same &= tr(x, s) == da(map.point_map[x], map.seed_map[s]);
    }
    CHECK(same);
  }
}

TEST_CASE("field multiply with zero excluded has equal preimages") {
  for (auto [q, n, m] : {std::tuple{2u, 3u, 1u}, {2u, 4u, 2u}, {3u, 2u, 1u}}) {
    const auto f = build_named(FieldMultiplySpec{q, n, m, true});
    const auto tab = to_table(f);
    std::size_t expected = f.x_size() / f.a_size();
    for (std::size_t s = 0; s < f.s_size(); ++s) {
      std::vector<std::size_t> counts(f.a_size());
      for (std::size_t x = 0; x < f.x_size(); ++x) ++counts[tab.at(x, s)];
      for (auto c : counts) CHECK(c == expected);
    }
  }
}

TEST_CASE("toeplitz is linear") {
  const auto g = build_named(ToeplitzSpec{2, 2, 3});
  REQUIRE(g.x_group());
  REQUIRE(g.a_group());
  const auto& xg = *g.x_group();
  const auto& ag = *g.a_group();
  for (std::size_t s = 0; s < g.s_size(); ++s) {
    for (std::uint32_t x = 0; x < g.x_size(); ++x) {
      for (std::uint32_t y = 0; y < g.x_size(); ++y) CHECK(g(xg.add(x, y), s) == ag.add(g(x, s), g(y, s)));
    }
  }
}

TEST_CASE("label lookup errors") {
  const auto f = build_named(AffineSpec{2, 2});
  CHECK(thrown_code([&] { f.x_index("(2,0)"); }) == ErrorCode::DomainError);
}
