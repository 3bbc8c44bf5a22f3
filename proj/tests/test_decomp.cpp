#include <catch_amalgamated.hpp>

#include "laura/laura.hpp"
#include "oracles.hpp"

using namespace laura;

namespace {

Presentation fixture(const std::string& name) {
  return load_algebra(std::string(LAURA_FIXTURES) + "/" + name + ".alg");
}

std::set<std::string> names(const Quiver& q, const std::set<Vertex>& vs) {
  std::set<std::string> out;
  for (Vertex v : vs) out.insert(q.vertex_id(v));
  return out;
}

using Names = std::set<std::string>;

}  // namespace

TEST_CASE("thirteen-vertex decomposition") {
  auto p = fixture("thirteen");
  const Quiver& q = p.quiver();
  auto d = decompose(p);
  REQUIRE(d.a_parts.size() == 2);
  REQUIRE(d.b_parts.size() == 2);
  CHECK(names(q, d.a_parts[0].objects) == Names{"8", "10", "11"});
  CHECK(names(q, d.a_parts[1].objects) == Names{"9", "12", "13"});
  CHECK(names(q, d.b_parts[0].objects) == Names{"1", "2", "5"});
  CHECK(names(q, d.b_parts[1].objects) == Names{"3", "4", "6"});
  CHECK(names(q, d.middle.objects) == Names{"5", "6", "7", "8", "9"});
  CHECK(q.vertex_id(*d.a_parts[0].anchor) == "11");
  CHECK(q.vertex_id(*d.a_parts[1].anchor) == "13");
  CHECK(q.vertex_id(*d.b_parts[0].anchor) == "1");
  CHECK(d.anchors_agree);
  CHECK(label(d.a_parts[1]) == "A2");
  CHECK(label(d.b_parts[0]) == "B1");
}

TEST_CASE("D(e_7) is the middle of the thirteen-vertex example") {
  auto p = fixture("thirteen");
  const Quiver& q = p.quiver();
  auto d7 = d_category(p, Walk{q.require_vertex("7"), {}});
  CHECK(names(q, d7.objects) == Names{"5", "6", "7", "8", "9"});
}

TEST_CASE("d_category agrees with the bounded string oracle") {
  std::vector<Presentation> corpus{fixture("thirteen"), fixture("skew6")};
  for (auto& p : random_corpus(31, 20)) corpus.push_back(std::move(p));
  for (const auto& p : corpus) {
    const Quiver& q = p.quiver();
    const std::size_t bound = 9;
    for (Vertex v = 0; v < q.vertex_count(); ++v) {
      auto got = d_category(p, Walk{v, {}});
      auto [vs, as] = oracle::d_support(p, Walk{v, {}}, bound);
      // The oracle only sees strings up to the bound, so it yields a subset.
      CHECK(std::includes(got.objects.begin(), got.objects.end(), vs.begin(), vs.end()));
      CHECK(std::includes(got.arrows.begin(), got.arrows.end(), as.begin(), as.end()));
      if (!exists_band(p)) {
        CHECK(got.objects == vs);
        CHECK(got.arrows == as);
      }
    }
  }
}

TEST_CASE("d_category for thirteen-vertex anchors matches the oracle exactly") {
  auto p = fixture("thirteen");
  const Quiver& q = p.quiver();
  for (auto id : {"1", "3", "7", "11", "13"}) {
    auto got = d_category(p, Walk{q.require_vertex(id), {}});
    auto [vs, as] = oracle::d_support(p, Walk{q.require_vertex(id), {}}, 10);
    CHECK(got.objects == vs);
    CHECK(got.arrows == as);
  }
  Walk factor = parse_walk(q, "7: beta1");
  auto got = d_category(p, factor);
  auto [vs, as] = oracle::d_support(p, factor, 10);
  CHECK(got.objects == vs);
}

TEST_CASE("structural checks pass on the thirteen-vertex example") {
  auto p = fixture("thirteen");
  auto d = decompose(p);
  auto s = check_structure(p, d);
  CHECK(s.full);
  CHECK(s.no_entry);
  CHECK(s.convex);
  CHECK(s.unique_cycle);
  CHECK(s.c_finite);
  CHECK(s.no_double_zero);
  CHECK(s.failures.empty());
  CHECK(support_cover_check(p, d, 12));
  CHECK(check_structure(p).all());
}

TEST_CASE("structural checks notice a broken decomposition") {
  auto p = fixture("thirteen");
  const Quiver& q = p.quiver();
  auto d = decompose(p);
  d.a_parts[0].arrows.erase(q.require_arrow("rho6"));
  auto s = check_structure(p, d);
  CHECK_FALSE(s.full);
  CHECK_FALSE(s.unique_cycle);
  auto e = decompose(p);
  e.a_parts[0].objects.insert(q.require_vertex("7"));
  e.a_parts[0].arrows.insert(q.require_arrow("gamma1"));
  CHECK_FALSE(check_structure(p, e).no_entry);
  auto f = decompose(p);
  f.middle = Subcategory{};
  CHECK_FALSE(support_cover_check(p, f, 6));
}

TEST_CASE("decompose refuses algebras outside its hypotheses") {
  CHECK_THROWS_AS(decompose(fixture("skew6")), PreconditionError);
  CHECK_THROWS_AS(decompose(fixture("square")), PreconditionError);
  CHECK_THROWS_AS(decompose(fixture("nine")), PreconditionError);
}

TEST_CASE("structure checks pass across a random corpus") {
  std::size_t decomposed = 0;
  for (const auto& p : random_corpus(4242, 400)) {
    if (classify(p).verdict != Verdict::StrictLauraOrTilted) continue;
    ++decomposed;
    auto d = decompose(p);
    auto s = check_structure(p, d);
    INFO(serialize(p));
    for (const auto& f : s.failures) INFO(f);
    CHECK(s.all());
    CHECK(d.anchors_agree);
    CHECK(support_cover_check(p, d, 10));
  }
  CHECK(decomposed > 5);
}
