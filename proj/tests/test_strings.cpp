#include <catch_amalgamated.hpp>

#include "laura/laura.hpp"
#include "oracles.hpp"

using namespace laura;

namespace {

Presentation fixture(const std::string& name) {
  auto p = load_algebra(std::string(LAURA_FIXTURES) + "/" + name + ".alg");
  return p.is_monomial() ? p : quotient_by_J(p);
}

std::set<std::string> library_strings(const Presentation& p, std::size_t len) {
  std::set<std::string> out;
  for (const auto& w : enumerate_strings(p, len)) out.insert(oracle::string_key(p.quiver(), w));
  return out;
}

std::set<std::string> library_bands(const Presentation& p, std::size_t len) {
  std::set<std::string> out;
  for (const auto& b : enumerate_bands(p, len)) out.insert(oracle::band_key(p.quiver(), b.walk));
  return out;
}

}  // namespace

TEST_CASE("automaton acceptance matches the window oracle on every walk") {
  for (auto name : {"thirteen", "skew6", "square"}) {
    auto p = fixture(name);
    StringAutomaton aut(p);
    std::size_t walks = 0;
    oracle::for_each_walk(p.quiver(), 7, [&](const Walk& w) {
      ++walks;
      bool expected = oracle::is_string(p, w);
      if (aut.accepts(w) != expected || is_string(p, w) != expected) {
        FAIL_CHECK(name << ": disagreement on " << render_walk(p.quiver(), w));
      }
    });
    CHECK(walks > 100);
  }
}

TEST_CASE("automaton agrees with the oracle on random string algebras") {
  auto corpus = random_corpus(101, 40);
  for (const auto& p : corpus) {
    StringAutomaton aut(p);
    oracle::for_each_walk(p.quiver(), 6, [&](const Walk& w) {
      if (aut.accepts(w) != oracle::is_string(p, w)) {
        FAIL_CHECK(p.name() << ": disagreement on " << render_walk(p.quiver(), w));
      }
    });
  }
}

TEST_CASE("string enumeration equals the brute-force set") {
  for (auto name : {"thirteen", "skew6", "square"}) {
    auto p = fixture(name);
    CHECK(library_strings(p, 6) == oracle::strings(p, 6));
  }
  for (const auto& p : random_corpus(202, 25)) {
    CHECK(library_strings(p, 5) == oracle::strings(p, 5));
  }
}

TEST_CASE("enumerated strings are canonical, distinct and ordered") {
  auto p = fixture("skew6");
  auto all = enumerate_strings(p, 8);
  for (std::size_t i = 0; i < all.size(); ++i) {
    CHECK(canonical_string(p.quiver(), all[i]) == all[i]);
    if (i) CHECK(WalkLess{}(all[i - 1], all[i]));
  }
}

TEST_CASE("band enumeration equals the brute-force set") {
  for (auto name : {"thirteen", "skew6", "square"}) {
    auto p = fixture(name);
    CHECK(library_bands(p, 6) == oracle::bands(p, 6));
  }
  for (const auto& p : random_corpus(303, 25)) {
    CHECK(library_bands(p, 6) == oracle::bands(p, 6));
  }
}

TEST_CASE("bands of the thirteen-vertex example") {
  auto p = fixture("thirteen");
  const Quiver& q = p.quiver();
  auto bands = enumerate_bands(p, pumping_bound(p));
  std::vector<std::string> rendered;
  for (const auto& b : bands) rendered.push_back(render_band(q, b));
  CHECK(rendered == std::vector<std::string>{"band: 2: rho1 rho2^-1", "band: 4: rho3 rho4^-1",
                                             "band: 11: rho5 rho6^-1", "band: 13: rho7 rho8^-1"});
  auto boundary = band_boundary(p, bands[0]);
  CHECK(boundary.entering == std::set<ArrowIndex>{q.require_arrow("alpha1")});
  CHECK(boundary.exiting.empty());
  boundary = band_boundary(p, bands[2]);
  CHECK(boundary.entering.empty());
  CHECK(boundary.exiting == std::set<ArrowIndex>{q.require_arrow("delta1")});
}

TEST_CASE("is_band examples") {
  auto p = fixture("skew6");
  const Quiver& q = p.quiver();
  CHECK(is_band(p, parse_band(q, "band: x4: gamma1 gamma2^-1 beta2^-1 beta1")));
  CHECK(is_band(p, parse_band(q, "band: x2: beta1 gamma1 gamma2^-1 beta2^-1")));
  CyclicWalk twice{power(parse_band(q, "band: x4: gamma1 gamma2^-1 beta2^-1 beta1"), 2)};
  CHECK_FALSE(is_band(p, twice));
  CHECK(exists_band(p));
  CHECK_FALSE(exists_band(fixture("square")));
}

TEST_CASE("automaton size stays within the state bound") {
  auto corpus = random_corpus(404, 100);
  for (auto name : {"thirteen", "skew6", "square"}) corpus.push_back(fixture(name));
  for (const auto& p : corpus) {
    const std::size_t v = p.quiver().vertex_count(), a = p.quiver().arrow_count();
    const std::size_t bound = v + 2 * a * (1 + 2 * p.total_zero_length());
    CHECK(pumping_bound(p) <= bound);
  }
}

TEST_CASE("string operations need a monomial presentation") {
  auto p = load_algebra(std::string(LAURA_FIXTURES) + "/square.alg");
  CHECK_THROWS_AS(enumerate_strings(p, 3), PreconditionError);
  CHECK_THROWS_AS(StringAutomaton(p), PreconditionError);
}

TEST_CASE("aho-corasick matcher finds every occurrence") {
  MultiPatternMatcher m(3, {{0, 1}, {1, 2, 1}, {2}});
  std::vector<std::size_t> text{0, 1, 2, 1, 0, 2};
  std::vector<bool> hits;
  MultiPatternMatcher::State s = MultiPatternMatcher::root;
  for (auto c : text) {
    s = m.step(s, c);
    hits.push_back(m.matched(s));
  }
  CHECK(hits == std::vector<bool>{false, true, true, true, false, true});
}
