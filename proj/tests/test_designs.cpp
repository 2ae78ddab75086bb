#include <doctest.h>

#include <algorithm>
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

IncidenceStructure from_blocks(std::size_t v, const std::vector<std::vector<std::size_t>>& blocks) {
  std::vector<std::vector<int>> rows(v, std::vector<int>(blocks.size(), 0));
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    for (auto x : blocks[b]) rows[x][b] = 1;
  }
  return IncidenceStructure::from_rows(index_labels(v), index_labels(blocks.size()), rows);
}

IncidenceStructure fano() {
  return from_blocks(7, {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5}, {1, 4, 6}, {2, 3, 6}, {2, 4, 5}});
}

// Same structure with points and blocks shuffled.
IncidenceStructure shuffled(const IncidenceStructure& d, std::mt19937_64& rng) {
  std::vector<std::size_t> pp(d.v()), bp(d.b());
  for (std::size_t i = 0; i < pp.size(); ++i) pp[i] = i;
  for (std::size_t i = 0; i < bp.size(); ++i) bp[i] = i;
  std::shuffle(pp.begin(), pp.end(), rng);
  std::shuffle(bp.begin(), bp.end(), rng);
  std::vector<std::vector<int>> rows(d.v(), std::vector<int>(d.b()));
  for (std::size_t x = 0; x < d.v(); ++x) {
    for (std::size_t b = 0; b < d.b(); ++b) rows[pp[x]][bp[b]] = d.at(x, b);
  }
  return IncidenceStructure::from_rows(index_labels(d.v()), index_labels(d.b()), rows);
}

bool ocfu_members_match(const Mosaic& a, const Mosaic& b) {
  if (a.members.size() != b.members.size()) return false;
  for (const auto& m : a.members) {
    if (!std::any_of(b.members.begin(), b.members.end(), [&](const auto& n) { return isomorphic(m, n); })) {
      return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("mosaic of a function") {
  const auto f = build_named(AffineSpec{2, 2});
  const auto m = mosaic_from_function(f);
  REQUIRE(m.members.size() == 2);
  for (const auto& d : m.members) {
    CHECK(d.v() == 4);
    CHECK(d.b() == 6);
  }
  for (std::size_t x = 0; x < 4; ++x) {
    for (std::size_t s = 0; s < 6; ++s) CHECK(m.members[0].at(x, s) + m.members[1].at(x, s) == 1);
  }
  CHECK_NOTHROW(validate_mosaic(m));

  auto broken = m;
  broken.members[1].matrix.bits[0] = 1;
  broken.members[0].matrix.bits[0] = 1;
  CHECK(thrown_code([&] { validate_mosaic(broken); }) == ErrorCode::NotAMosaic);
}

TEST_CASE("function and mosaic round trip for every named family") {
  for (const auto& d : testing::small_builtins()) {
    const auto f = build_named(d);
    CAPTURE(f.descriptor());
    CHECK(to_table(function_from_mosaic(mosaic_from_function(f))) == to_table(f));
    CHECK(to_table(function_from_mosaic(dual_mosaic(mosaic_from_function(f)))) == to_table(transpose(f)));
  }
}

TEST_CASE("sum of the affine mosaic") {
  const auto sum = sum_mosaic(mosaic_from_function(build_named(AffineSpec{2, 2})));
  CHECK(sum.v() == 4);
  CHECK(sum.b() == 12);
  const auto p = analyze_structure(sum);
  CHECK(p.k == 2u);
  CHECK(sum.blocks[1] == "(((0,1),0),1)");
}

TEST_CASE("structure parameters") {
  const auto affine = mosaic_from_function(build_named(AffineSpec{2, 2}));
  const auto p = analyze_structure(affine.members[0]);
  CHECK(p.bibd);
  CHECK(p.v == 4);
  CHECK(p.b == 6);
  CHECK(p.k == 2u);
  CHECK(p.r == 3u);
  CHECK(p.lambda == 1u);
  CHECK(p.eq_bk_vr == true);
  CHECK(p.eq_lambda == true);

  const auto dual = dual_mosaic(mosaic_from_function(build_named(DualAffineSpec{2, 2})));
  const auto dp = analyze_structure(dual.members[0]);
  CHECK(dp.bibd);
  CHECK(dp.v == 4);
  CHECK(dp.k == 2u);
  CHECK(dp.lambda == 1u);
  CHECK(dp.quasi_symmetric);
  CHECK(dp.intersection_numbers == std::set<std::uint64_t>{0, 1});

  const auto tr = mosaic_from_function(build_named(TransversalSpec{3, {0, 1, 2}, false}));
  const auto tp = analyze_structure(tr.members[0]);
  CHECK_FALSE(tp.bibd);
  CHECK(tp.k == 3u);
  CHECK(tp.r == 3u);
  CHECK(tp.pair_counts == std::map<std::uint64_t, std::uint64_t>{{0, 9}, {1, 27}});
  REQUIRE(tp.point_classes);
  CHECK(tp.point_classes->size() == 3);

  const auto fp = analyze_structure(fano());
  CHECK(fp.symmetric);
  CHECK(fp.lambda == 1u);
}

TEST_CASE("block count of mosaics of BIBDs") {
  for (const auto& d : testing::small_builtins()) {
    const auto f = build_named(d);
    const auto m = mosaic_from_function(f);
    const auto p = analyze_structure(m.members[0]);
    if (!p.bibd || p.k == p.v) continue;
    bool all_bibd = true;
    for (const auto& member : m.members) all_bibd &= analyze_structure(member).bibd;
    if (!all_bibd) continue;
    CAPTURE(f.descriptor());
    CHECK(p.b >= p.v + *p.r - 1);
    const bool affine = std::holds_alternative<AffineSpec>(d);
    CHECK((p.b == p.v + *p.r - 1) == affine);
  }
}

TEST_CASE("resolutions") {
  const auto sum = sum_mosaic(mosaic_from_function(build_named(AffineSpec{2, 2})));
  const auto found = find_resolution(sum);
  REQUIRE(found.resolution);
  CHECK(found.resolution->classes.size() == 6);
  for (const auto& c : found.resolution->classes) CHECK(c.size() == 2);
  CHECK(is_resolution(sum, *found.resolution));

  const auto f = find_resolution(fano());
  CHECK_FALSE(f.resolution);
  CHECK_FALSE(f.reason.empty());

  const auto uneven = from_blocks(3, {{0, 1}, {2}, {0}});
  const auto u = find_resolution(uneven);
  CHECK_FALSE(u.resolution);
  CHECK(u.nodes == 0);
  CHECK(u.reason == "replication number is not constant");

  // 9 points, lines of AG(2,3): resolvable into the 4 parallel classes
  const auto ag23 = sum_mosaic(mosaic_from_function(build_named(HyperplaneSpec{3, 2})));
  const auto r = find_resolution(ag23);
  REQUIRE(r.resolution);
  CHECK(r.resolution->classes.size() == 4);
}

TEST_CASE("mosaic from a resolution") {
  const auto affine = mosaic_from_function(build_named(AffineSpec{2, 2}));
  const auto sum = sum_mosaic(affine);
  const auto res = *find_resolution(sum).resolution;
  const auto rebuilt = mosaic_from_resolution(sum, res, canonical_labeling(res), {"0", "1"});
  CHECK_NOTHROW(validate_mosaic(rebuilt));
  CHECK(ocfu_members_match(rebuilt, affine));
  CHECK(min_epsilon(function_from_mosaic(rebuilt), HashClass::ACFU).eps == q(1, 3));

  const auto partition = from_blocks(4, {{0, 3}, {1}, {2}});
  const Resolution single{{{0, 1, 2}}};
  const auto m = mosaic_from_resolution(partition, single, {{0, 1, 2}}, {"a", "b", "c"});
  CHECK(m.members[0].at(0, 0));
  CHECK(m.members[0].at(3, 0));
  CHECK(m.members[1].at(1, 0));
  CHECK(m.members[2].at(2, 0));

  CHECK(thrown_code([&] { mosaic_from_resolution(partition, single, {{0, 0, 2}}, {"a", "b", "c"}); }) ==
        ErrorCode::BadLabeling);
}

TEST_CASE("resolution pipeline reproduces the input") {
  std::vector<IncidenceStructure> inputs;
  inputs.push_back(sum_mosaic(mosaic_from_function(build_named(AffineSpec{2, 2}))));
  inputs.push_back(sum_mosaic(mosaic_from_function(build_named(HyperplaneSpec{3, 2}))));
  inputs.push_back(sum_mosaic(mosaic_from_function(build_named(HyperplaneSpec{2, 3}))));
  inputs.push_back(sum_mosaic(mosaic_from_function(build_named(AffineSpec{3, 2}))));
  for (const auto& d : inputs) {
    REQUIRE(d.v() <= 16);
    const auto res = find_resolution(d);
    REQUIRE(res.resolution);
    const auto a = res.resolution->classes.front().size();
    const auto m = mosaic_from_resolution(d, *res.resolution, canonical_labeling(*res.resolution), index_labels(a));
    CHECK(isomorphic(sum_mosaic(m), d));
  }
}

TEST_CASE("canonical form and isomorphism") {
  std::mt19937_64 rng(21);
  const auto f = fano();
  for (int i = 0; i < 10; ++i) CHECK(canonical_form(shuffled(f, rng)) == canonical_form(f));

  const auto tr = mosaic_from_function(build_named(TransversalSpec{3, {0, 1, 2}, false})).members[0];
  for (int i = 0; i < 5; ++i) CHECK(isomorphic(shuffled(tr, rng), tr));

  // same parameters, different structure: a BIBD member against a non-BIBD
  auto broken = tr;
  std::swap(broken.matrix.bits[0], broken.matrix.bits[1]);
  std::swap(broken.matrix.bits[broken.b()], broken.matrix.bits[broken.b() + 1]);
  CHECK_FALSE(isomorphic(broken, tr));
  CHECK_FALSE(isomorphic(f, from_blocks(7, {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5}, {1, 4, 6}, {2, 3, 6}, {2, 3, 5}})));
}

TEST_CASE("structure theorems") {
  const auto affine = check_structure_theorems(build_named(AffineSpec{3, 2}));
  CHECK(affine.all_hold());
  auto has = [](const TheoremReport& r, const std::string& name) {
    return std::any_of(r.checks.begin(), r.checks.end(), [&](const auto& c) { return c.name == name && c.holds; });
  };
  CHECK(has(affine, "ocfu_members_are_bibds"));
  CHECK(has(affine, "bibd_mosaic_is_ocfu"));
  CHECK(has(affine, "bibd_mosaic_block_count"));

  const auto dual = check_structure_theorems(build_named(DualAffineSpec{2, 2}));
  CHECK(dual.all_hold());
  CHECK(has(dual, "variance_equality_dual_quasi_symmetric"));

  for (const auto& d : testing::small_builtins()) {
    const auto f = build_named(d);
    CAPTURE(f.descriptor());
    CHECK(check_structure_theorems(f).all_hold());
  }

  FunctionTable t{3, 2, {0, 0, 0, 1, 1, 0}};
  const auto irregular = HashFamily::from_table(index_labels(3), index_labels(2), index_labels(2), t);
  CHECK(check_structure_theorems(irregular).checks.empty());
}
