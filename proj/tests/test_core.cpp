#include <catch_amalgamated.hpp>

#include <random>

#include "laura/laura.hpp"

using namespace laura;

namespace {

Presentation fixture(const std::string& name) {
  return load_algebra(std::string(LAURA_FIXTURES) + "/" + name + ".alg");
}

Path ids(const Presentation& p, std::vector<std::string> names) {
  return make_path(p.quiver(), names);
}

}  // namespace

TEST_CASE("quiver indexes vertices and arrows in id order") {
  Quiver q({"b", "a", "c"}, {{"y", "a", "b"}, {"x", "b", "c"}});
  CHECK(q.vertex_id(0) == "a");
  CHECK(q.arrow_id(0) == "x");
  CHECK(q.source(*q.arrow_index("y")) == *q.vertex_index("a"));
  CHECK(q.out_arrows(*q.vertex_index("b")).size() == 1);
  CHECK_THROWS_AS(Quiver({"a", "a"}, {}), SemanticError);
  CHECK_THROWS_AS(Quiver({"a"}, {{"x", "a", "z"}}), SemanticError);
}

TEST_CASE("zero relations are minimalized") {
  auto p = make_presentation("m", {"1", "2", "3", "4"},
                             {{"a", "1", "2"}, {"b", "2", "3"}, {"c", "3", "4"}},
                             {{"a", "b", "c"}, {"a", "b"}, {"a", "b"}});
  REQUIRE(p.zeros().size() == 1);
  CHECK(p.zeros()[0] == ids(p, {"a", "b"}));
  CHECK(p.contains_zero(ids(p, {"a", "b", "c"}).arrows));
  CHECK_FALSE(p.contains_zero(ids(p, {"b", "c"}).arrows));
}

TEST_CASE("minimalization is idempotent on random zero sets") {
  std::mt19937_64 rng(5);
  for (int round = 0; round < 200; ++round) {
    std::vector<Path> zs;
    const int count = static_cast<int>(rng() % 6);
    for (int k = 0; k < count; ++k) {
      Path z;
      const std::size_t len = 2 + rng() % 3;
      for (std::size_t i = 0; i < len; ++i) z.arrows.push_back(rng() % 3);
      zs.push_back(z);
    }
    auto once = minimalize_zero_set(zs);
    CHECK(minimalize_zero_set(once) == once);
    for (const auto& z : zs) {
      bool covered = false;
      for (const auto& m : once) covered = covered || contains_subpath(z.arrows, m.arrows);
      CHECK(covered);
    }
  }
}

TEST_CASE("presentations reject bad relations and infinite dimension") {
  CHECK_THROWS_AS(make_presentation("x", {"1", "2"}, {{"a", "1", "2"}, {"b", "1", "2"}},
                                    {{"a", "b"}}),
                  SemanticError);
  CHECK_THROWS_AS(make_presentation("loop", {"1"}, {{"a", "1", "1"}}, {}), SemanticError);
  CHECK_NOTHROW(make_presentation("loop", {"1"}, {{"a", "1", "1"}}, {{"a", "a"}}));
  CHECK_THROWS_AS(make_presentation("cyc", {"1", "2"}, {{"a", "1", "2"}, {"b", "2", "1"}},
                                    {}),
                  SemanticError);
  CHECK_NOTHROW(make_presentation("cyc", {"1", "2"}, {{"a", "1", "2"}, {"b", "2", "1"}},
                                  {{"a", "b", "a"}}));
}

TEST_CASE("thirteen-vertex fixture has 16 arrows and 10 zero relations") {
  auto p = fixture("thirteen");
  CHECK(p.quiver().vertex_count() == 13);
  CHECK(p.quiver().arrow_count() == 16);
  CHECK(p.zeros().size() == 10);
  CHECK(p.is_monomial());
}

TEST_CASE("skew6 fixture parses with 6 vertices, 6 arrows, 4 relations") {
  auto p = fixture("skew6");
  CHECK(p.quiver().vertex_count() == 6);
  CHECK(p.quiver().arrow_count() == 6);
  CHECK(p.zeros().size() == 4);
}

TEST_CASE("validation of the fixtures") {
  SECTION("nine-vertex example fails unique continuation at beta1") {
    auto r = validate_string_algebra(fixture("nine"));
    CHECK_FALSE(r.ok());
    CHECK(r.has(2, "beta1"));
    CHECK_FALSE(r.has(1, "x5"));
  }
  SECTION("thirteen and skew6 are string algebras") {
    CHECK(validate_string_algebra(fixture("thirteen")).ok());
    CHECK(validate_string_algebra(fixture("skew6")).ok());
  }
  SECTION("commutative square is special biserial but not a string algebra") {
    auto p = fixture("square");
    auto s = validate_string_algebra(p);
    CHECK_FALSE(s.ok());
    CHECK(s.violations.front().condition == 3);
    CHECK(validate_special_biserial(p).ok());
    auto r = quotient_by_J(p);
    CHECK(r.is_monomial());
    CHECK(r.zeros().size() == 2);
    CHECK(validate_string_algebra(r).ok());
  }
  SECTION("three arrows into a vertex violate the valency condition") {
    auto p = make_presentation("v", {"1", "2", "3", "4"},
                               {{"a", "1", "4"}, {"b", "2", "4"}, {"c", "3", "4"}}, {});
    CHECK(validate_string_algebra(p).has(1, "4"));
  }
  SECTION("quotient_by_J refuses non special biserial input") {
    CHECK_THROWS_AS(quotient_by_J(fixture("nine")), PreconditionError);
  }
}

TEST_CASE("path membership defers to J when a commutativity side occurs") {
  auto p = fixture("square");
  CHECK_THROWS_AS(path_in_ideal(p, ids(p, {"a", "b"})), PreconditionError);
  auto r = quotient_by_J(p);
  CHECK(path_in_ideal(r, ids(r, {"a", "b"})));
}

TEST_CASE("walk algebra") {
  auto p = fixture("skew6");
  const Quiver& q = p.quiver();
  Walk w = parse_walk(q, "x4: gamma1 gamma2^-1 beta2^-1 beta1");
  CHECK(is_walk(q, w));
  CHECK(is_closed(q, w));
  CHECK(render_walk(q, w) == "x4: gamma1 gamma2^-1 beta2^-1 beta1");
  CHECK(end_vertex(q, w) == *q.vertex_index("x4"));
  Walk inv = inverse(q, w);
  CHECK(render_walk(q, inv) == "x4: beta1^-1 beta2 gamma2 gamma1^-1");
  CHECK(inverse(q, inv) == w);
  CHECK(passages(q, w).size() == 5);

  CyclicWalk c{w};
  auto canon = canonical_band(q, c);
  CHECK(canonical_band(q, rotate(q, c, 2)).walk == canon.walk);
  CHECK(canonical_band(q, inverse(q, c)).walk == canon.walk);
  CHECK(is_primitive(w.letters));
  CHECK_FALSE(is_primitive(power(c, 2).letters));
  CHECK(primitive_root(power(c, 3).letters) == w.letters);

  CHECK_THROWS_AS(parse_walk(q, "x4: alpha"), SemanticError);
  CHECK_THROWS_AS(parse_walk(q, "x4 gamma1"), SemanticError);
  CHECK_THROWS_AS(parse_band(q, "band: x4: gamma1"), SemanticError);
}

TEST_CASE("canonical string is the smaller orientation") {
  auto p = fixture("skew6");
  const Quiver& q = p.quiver();
  Walk w = parse_walk(q, "x5: gamma1^-1 beta1^-1");
  Walk c = canonical_string(q, w);
  CHECK((c == w || c == inverse(q, w)));
  CHECK(canonical_string(q, inverse(q, w)) == c);
}
