#include <doctest.h>

#include <random>

#include "acfu/io.hpp"
#include "builtins.hpp"
#include "support.hpp"

using namespace acfu;
using testing::q;
using testing::thrown_code;

TEST_CASE("rationals") {
  CHECK(to_fraction_string(q(3)) == "3/1");
  CHECK(to_fraction_string(q(-2, 4)) == "-1/2");
  CHECK(parse_rational("6/8") == q(3, 4));
  CHECK(parse_rational("5") == q(5));
  CHECK(thrown_code([] { parse_rational("1/0"); }) == ErrorCode::ParseError);
  CHECK(thrown_code([] { parse_rational("x"); }) == ErrorCode::ParseError);
  CHECK(format_real(0.70710678118654757) == "0.707106781187");
}

TEST_CASE("family files round trip byte for byte") {
  std::vector<HashFamily> families;
  for (const auto& d : testing::small_builtins()) families.push_back(build_named(d));
  std::mt19937_64 rng(8);
  families.push_back(random_family(5, 6, 3, rng));
  families.back().annotate("note");
  for (const auto& f : families) {
    CAPTURE(f.descriptor());
    const auto text = io::dump(io::family_to_json(f));
    const auto back = io::family_from_json(io::parse(text));
    CHECK(io::dump(io::family_to_json(back)) == text);
    CHECK(to_table(back) == to_table(f));
    CHECK(back.x_group() == f.x_group());
    CHECK(back.a_group() == f.a_group());
    CHECK(back.annotations() == f.annotations());
  }
}

TEST_CASE("design, quasigroup and source files round trip") {
  const auto m = mosaic_from_function(build_named(AffineSpec{2, 2}));
  const auto mt = io::dump(io::mosaic_to_json(m));
  CHECK(io::dump(io::mosaic_to_json(io::mosaic_from_json(io::parse(mt)))) == mt);

  const auto d = sum_mosaic(m);
  const auto dt = io::dump(io::incidence_to_json(d));
  CHECK(io::incidence_from_json(io::parse(dt)) == d);
  CHECK(io::dump(io::incidence_to_json(io::incidence_from_json(io::parse(dt)))) == dt);

  std::mt19937_64 rng(3);
  const auto qg = Quasigroup::random(index_labels(4), rng);
  const auto qt = io::dump(io::quasigroup_to_json(qg));
  CHECK(io::quasigroup_from_json(io::parse(qt)).table() == qg.table());

  const auto src = iid_extend(symmetric_source(3, q(1, 8)), 2);
  const auto st = io::dump(io::source_to_json(src));
  const auto back = io::source_from_json(io::parse(st));
  CHECK(back.p == src.p);
  CHECK(io::dump(io::source_to_json(back)) == st);
}

TEST_CASE("malformed input") {
  CHECK(thrown_code([] { io::parse("{"); }) == ErrorCode::ParseError);
  CHECK(thrown_code([] { io::family_from_json(io::parse(R"({"x_labels": ["a"]})")); }) == ErrorCode::ParseError);
  CHECK(thrown_code([] { io::read_file("/nonexistent/file.json"); }) == ErrorCode::ParseError);
}

TEST_CASE("compact printer keeps scalar arrays inline") {
  io::ordered_json j;
  j["a"] = {1, 2};
  j["b"] = io::ordered_json::array({io::ordered_json::array({0, 1})});
  CHECK(io::dump(j) == "{\n  \"a\": [1, 2],\n  \"b\": [\n    [0, 1]\n  ]\n}\n");
}
