// Prints one PASS/FAIL line per acceptance criterion and exits non-zero if any fails.
#include <chrono>
#include <iostream>
#include <sstream>

#include "laura/laura.hpp"

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

std::string arrow_word(const Quiver& q, const Path& p) {
  std::string s;
  for (ArrowIndex a : p.arrows) s += (s.empty() ? "" : " ") + q.arrow_id(a);
  return s;
}

int failures = 0;

void report(int n, bool ok, const std::string& detail) {
  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << n << ": " << detail << "\n";
  if (!ok) ++failures;
}

template <class F>
void run(int n, F&& f) {
  try {
    std::string detail;
    bool ok = f(detail);
    report(n, ok, detail);
  } catch (const std::exception& e) {
    report(n, false, std::string("exception: ") + e.what());
  }
}

using Names = std::set<std::string>;

}  // namespace

int main() {
  run(1, [](std::string& detail) {
    auto p = fixture("thirteen");
    const Quiver& q = p.quiver();
    bool ok = !find_doze(p).has_value();
    ok = ok && classify(p).verdict == Verdict::StrictLauraOrTilted;
    auto d = decompose(p);
    ok = ok && d.a_parts.size() == 2 && d.b_parts.size() == 2;
    if (ok) {
      ok = names(q, d.a_parts[0].objects) == Names{"8", "10", "11"} &&
           names(q, d.a_parts[1].objects) == Names{"9", "12", "13"} &&
           names(q, d.b_parts[0].objects) == Names{"1", "2", "5"} &&
           names(q, d.b_parts[1].objects) == Names{"3", "4", "6"} &&
           names(q, d.middle.objects) == Names{"5", "6", "7", "8", "9"};
    }
    auto s = check_structure(p, d);
    ok = ok && s.all();
    detail = "13-vertex: no DOZE, StrictLauraOrTilted, A/B/C parts exact, structure checks " +
             std::string(s.all() ? "pass" : "fail");
    return ok;
  });

  run(2, [](std::string& detail) {
    auto p = fixture("skew6");
    const Quiver& q = p.quiver();
    auto w = find_doze(p);
    if (!w) {
      detail = "no witness found";
      return false;
    }
    std::set<std::string> rel{arrow_word(q, w->rho1), arrow_word(q, w->rho2)};
    auto expected = canonical_band(q, parse_band(q, "band: x4: gamma1 gamma2^-1 beta2^-1 beta1"));
    bool ok = rel == std::set<std::string>{"alpha beta1", "gamma1 delta"} &&
              canonical_band(q, w->band).walk == expected.walk &&
              classify(p).verdict == Verdict::NotLaura;
    detail = "skew6: witness " + render_walk(q, w->assembled(q, 0)) + ", verdict NotLaura";
    return ok;
  });

  run(3, [](std::string& detail) {
    auto p = fixture("skew6");
    auto w = *find_doze(p);
    std::vector<std::size_t> totals;
    bool ok = true;
    for (std::size_t n = 0; n <= 2; ++n) {
      auto m = dozed_module(p, w, n);
      totals.push_back(m.total_dim());
      ok = ok && pd_at_least_2(p, m) && id_at_least_2(p, m);
    }
    ok = ok && totals == std::vector<std::size_t>{1, 5, 9};
    detail = "M0, M1, M2 have pd >= 2 and id >= 2, totals " + std::to_string(totals[0]) + "/" +
             std::to_string(totals[1]) + "/" + std::to_string(totals[2]);
    return ok;
  });

  run(4, [](std::string& detail) {
    auto r = validate_string_algebra(fixture("nine"));
    detail = "nine-vertex: not a string algebra, condition 2 violated at beta1";
    return !r.ok() && r.has(2, "beta1");
  });

  // Corpus shared by criteria 5 and 6.
  std::vector<Presentation> corpus;
  for (auto name : {"thirteen", "skew6"}) corpus.push_back(fixture(name));
  corpus.push_back(quotient_by_J(fixture("square")));
  for (auto& p : random_corpus(20261016, 500)) corpus.push_back(std::move(p));

  run(5, [&](std::string& detail) {
    auto start = std::chrono::steady_clock::now();
    std::size_t agree = 0, with = 0;
    for (const auto& p : corpus) {
      auto exact = find_doze(p);
      auto brute = find_doze_bruteforce(p, pumping_bound(p));
      if (exact.has_value() == brute.has_value()) ++agree;
      if (exact) ++with;
    }
    auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream s;
    s << agree << "/" << corpus.size() << " agree (" << with << " with DOZE) in " << secs << " s";
    detail = s.str();
    return agree == corpus.size() && secs <= 300.0;
  });

  run(6, [&](std::string& detail) {
    std::size_t doze_free = 0, decomposed = 0, violations = 0;
    for (const auto& p : corpus) {
      if (find_doze(p)) continue;
      ++doze_free;
      auto bands = enumerate_bands(p, pumping_bound(p));
      std::vector<std::set<Vertex>> supports;
      bool two_sided = false;
      for (const auto& b : bands) {
        supports.push_back(vertices_of(p.quiver(), b.walk));
        auto bd = band_boundary(p, b);
        two_sided = two_sided || (!bd.entering.empty() && !bd.exiting.empty());
      }
      for (std::size_t i = 0; i < supports.size(); ++i) {
        for (std::size_t j = i + 1; j < supports.size(); ++j) {
          std::size_t shared = 0;
          for (Vertex v : supports[i]) shared += supports[j].count(v);
          if (shared > 1) ++violations;
        }
      }
      if (two_sided && has_double_zero(p)) ++violations;
      if (classify(p).verdict == Verdict::StrictLauraOrTilted) {
        ++decomposed;
        auto d = decompose(p);
        if (!check_structure(p, d).all() || !support_cover_check(p, d, 12)) ++violations;
      }
    }
    detail = std::to_string(doze_free) + " DOZE-free instances, " + std::to_string(decomposed) +
             " decomposed, " + std::to_string(violations) + " violations";
    return violations == 0;
  });

  run(7, [](std::string& detail) {
    bool ok = true;
    std::ostringstream s;
    for (auto name : {"thirteen", "skew6"}) {
      auto p = fixture(name);
      const std::size_t l0 = pumping_bound(p);
      auto res = conjecture_scan(p, l0 + 10, l0 + 1);
      if (find_doze(p)) {
        std::set<std::size_t> dims;
        for (const auto& w : res.witnesses) dims.insert(w.length() + 1);
        ok = ok && dims.size() >= 3;
        s << name << ": " << res.count_both_ge2 << " witnesses, " << dims.size()
          << " distinct dimensions; ";
      } else {
        ok = ok && res.count_both_ge2 == 0;
        s << name << ": " << res.count_both_ge2 << " witnesses; ";
      }
    }
    detail = s.str() + "window (L, L+10]";
    return ok;
  });

  return failures == 0 ? 0 : 1;
}
