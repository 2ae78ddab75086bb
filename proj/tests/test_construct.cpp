#include <doctest.h>

#include <random>

#include "acfu/construct.hpp"
#include "acfu/designs.hpp"
#include "acfu/verify.hpp"
#include "builtins.hpp"
#include "support.hpp"

using namespace acfu;
using testing::q;
using testing::thrown_code;

namespace {

HashFamily product_table(std::uint32_t p) {
  FunctionTable t{p, p, {}};
  for (std::uint32_t y = 0; y < p; ++y) {
    for (std::uint32_t h = 0; h < p; ++h) t.entries.push_back(y * h % p);
  }
  auto f = HashFamily::from_table(index_labels(p), index_labels(p), index_labels(p), t, "yh");
  f.with_groups(AbelianGroup::cyclic(p), AbelianGroup::cyclic(p));
  return f;
}

Rational eps(const HashFamily& f, HashClass c) { return min_epsilon(f, c).eps; }

}  // namespace

TEST_CASE("quasigroups") {
  const auto c2 = Quasigroup::cyclic(2);
  CHECK(c2.table() == std::vector<std::vector<std::uint32_t>>{{0, 1}, {1, 0}});
  const auto c3 = Quasigroup::cyclic(3);
  for (std::uint32_t a = 0; a < 3; ++a) {
    for (std::uint32_t b = 0; b < 3; ++b) {
      CHECK(c3.mul(a, b) == (a + b) % 3);
      CHECK(c3.rdiv(a, b) == (a + 3 - b) % 3);
      CHECK(c3.mul(c3.rdiv(a, b), b) == a);
    }
  }
  CHECK(thrown_code([] { Quasigroup::from_table({{0, 0}, {1, 0}}, {"0", "1"}); }) == ErrorCode::NotLatinSquare);

  std::mt19937_64 rng(1);
  for (int i = 0; i < 20; ++i) {
    const auto r = Quasigroup::random(index_labels(5), rng);
    CHECK_NOTHROW(Quasigroup::from_table(r.table(), r.labels()));
  }
}

TEST_CASE("seed extension") {
  const auto g = build_named(FieldMultiplySpec{2, 3, 1, true});
  const auto ext = seed_extension(g, Quasigroup::cyclic(g.a_labels()));
  CHECK(ext.s_size() == 14);
  const auto report = classify(ext);
  CHECK(report.eps_acfu->eps == q(3, 7));
  CHECK(report.ocfu);

  const auto hyper = build_named(HyperplaneSpec{2, 2});
  CHECK(same_function(seed_extension(hyper, Quasigroup::cyclic(2)), build_named(AffineSpec{2, 2})));

  FunctionTable t{3, 2, {0, 1, 0, 1, 1, 0}};
  const auto worst = HashFamily::from_table(index_labels(3), index_labels(2), index_labels(2), t);
  CHECK(eps(seed_extension(worst, Quasigroup::cyclic(2)), HashClass::ACFU) == 1);

  CHECK(thrown_code([&] { seed_extension(hyper, Quasigroup::cyclic(3)); }) == ErrorCode::CarrierMismatch);
}

TEST_CASE("point extension") {
  const auto g = krawczyk_lift(build_named(ToeplitzSpec{2, 1, 2})).family;
  CHECK(eps(g, HashClass::ASU) == q(1, 2));
  const auto p = point_extension(g, Quasigroup::from_group(*g.a_group(), g.a_labels()));
  CHECK(p.x_size() == 8);
  CHECK(eps(p, HashClass::ACFU) == q(1, 2));

  FunctionTable t{2, 3, {0, 0, 1, 0, 1, 1}};
  const auto irregular = HashFamily::from_table(index_labels(2), index_labels(3), index_labels(2), t);
  CHECK_FALSE(regularity_check(point_extension(irregular, Quasigroup::cyclic(2))).regular);
}

TEST_CASE("extensions transfer epsilon exactly") {
  std::mt19937_64 rng(2024);
  std::vector<HashFamily> gs;
  for (const auto& d : testing::small_builtins()) {
    auto g = build_named(d);
    if (g.x_size() * g.s_size() * g.a_size() <= 4000) gs.push_back(std::move(g));
  }
  for (int i = 0; i < 40; ++i) {
    const std::size_t xs = 2 + rng() % 4, hs = 1 + rng() % 4, as = 1 + rng() % 3;
    gs.push_back(random_family(xs, hs, as, rng));
  }
  for (const auto& g : gs) {
    CAPTURE(g.descriptor());
    const auto qg = Quasigroup::random(g.a_labels(), rng);
    CHECK(eps(seed_extension(g, qg), HashClass::ACFU) == eps(g, HashClass::AU));
    if (regularity_check(g).regular) {
      CHECK(eps(point_extension(g, qg), HashClass::ACFU) == eps(g, HashClass::ASU));
    }
  }
}

TEST_CASE("members of a seed extension are isomorphic to the sum") {
  for (const auto& d : {FamilyDescriptor{HyperplaneSpec{2, 2}}, FamilyDescriptor{ToeplitzSpec{2, 1, 2}},
                        FamilyDescriptor{TransversalSpec{3, {0, 1, 2}, false}}}) {
    const auto g = build_named(d);
    const auto sum = sum_mosaic(mosaic_from_function(g));
    std::mt19937_64 rng(4);
    const auto m = mosaic_from_function(seed_extension(g, Quasigroup::random(g.a_labels(), rng)));
    for (const auto& member : m.members) CHECK(isomorphic(member, sum));
  }
}

TEST_CASE("concatenation") {
  const auto f1 = krawczyk_lift(build_named(ToeplitzSpec{2, 2, 2})).family;
  const auto f2 = build_named(AffineSpec{2, 2});
  CHECK(eps(f1, HashClass::ASU) == q(1, 4));
  const auto c = concatenate(f1, f2);
  const auto bound = concatenation_bound(f1, f2);
  REQUIRE(bound);
  CHECK(*bound == q(1, 2));
  CHECK(eps(c, HashClass::ACFU) <= *bound);
  CHECK(c.annotations() == std::vector<std::string>{"acfu_bound 1/2"});

  // one output bit cannot feed a four-point family
  const auto narrow = krawczyk_lift(build_named(ToeplitzSpec{2, 1, 2})).family;
  CHECK(thrown_code([&] { concatenate(narrow, f2); }) == ErrorCode::DomainMismatch);

  // an injective first stage leaves the second stage's profile unchanged
  FunctionTable id{4, 1, {0, 1, 2, 3}};
  const auto inj = HashFamily::from_table(f2.x_labels(), {"s"}, f2.x_labels(), id);
  CHECK(eps(concatenate(inj, f2), HashClass::ACFU) == eps(f2, HashClass::ACFU));
}

TEST_CASE("lift of a balanced homomorphism") {
  const auto t = krawczyk_lift(build_named(ToeplitzSpec{2, 1, 2}));
  CHECK(t.eps == q(1, 2));
  CHECK(eps(t.family, HashClass::ASU) == q(1, 2));

  const auto fm = krawczyk_lift(build_named(FieldMultiplySpec{2, 3, 1, false}));
  CHECK(fm.eps == q(1, 2));
  CHECK(eps(fm.family, HashClass::ASU) == q(1, 2));

  FunctionTable nl{2, 2, {1, 0, 1, 1}};  // g(0, h) != 0
  auto bad = HashFamily::from_table(index_labels(2), index_labels(2), index_labels(2), nl);
  bad.with_groups(AbelianGroup::cyclic(2), AbelianGroup::cyclic(2));
  CHECK(thrown_code([&] { krawczyk_lift(bad); }) == ErrorCode::NotHomomorphic);
  CHECK(thrown_code([] { krawczyk_lift(build_named(ToeplitzSpec{2, 1, 2}), q(1, 4)); }) == ErrorCode::NotBalanced);
}

TEST_CASE("double extension of the field product matches the transversal family") {
  const auto de = double_extension(product_table(3));
  CHECK(de.eps == q(1, 3));
  CHECK(de.family.x_size() == 9);
  CHECK(de.family.s_size() == 9);
  CHECK(eps(de.family, HashClass::ACFU) == q(1, 3));

  const auto tr = build_named(TransversalSpec{3, {0, 1, 2}, false});
  bool same = true;
  for (std::uint32_t y = 0; y < 3; ++y) {
    for (std::uint32_t b = 0; b < 3; ++b) {
      const std::size_t point = ((3 - y) % 3) * 3 + b;  // (h', y') = (-y, b)
      for (std::size_t seed = 0; seed < 9; ++seed) same &= de.family(y * 3 + b, seed) == tr(point, seed);
    }
  }
  CHECK(same);
  CHECK(to_table(seed_extension(de.g1, Quasigroup::cyclic(de.g1.a_labels()))) == to_table(de.family));
  CHECK(to_table(point_extension(de.g2, Quasigroup::cyclic(de.g2.a_labels()))) == to_table(de.family));
}

TEST_CASE("double extension of a constant map") {
  FunctionTable zero{2, 2, {0, 0, 0, 0}};
  auto a = HashFamily::from_table(index_labels(2), index_labels(2), index_labels(2), zero);
  a.with_groups(AbelianGroup::cyclic(2), AbelianGroup::cyclic(2));
  CHECK(thrown_code([&] { double_extension(a, q(1, 2)); }) == ErrorCode::NotBalanced);
  CHECK(double_extension(a, q(1)).eps == 1);
}
