#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "laura/error.hpp"
#include "laura/presentation.hpp"
#include "laura/validate.hpp"

namespace laura {

struct RandomLimits {
  std::size_t max_vertices = 8;
  std::size_t max_arrows = 12;
  std::size_t max_relations = 6;
};

namespace detail {

inline std::size_t pick(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

// One attempt; returns false when the draw has to be thrown away.
inline bool try_random_string_algebra(std::mt19937_64& rng, const RandomLimits& lim,
                                      const std::string& name, Presentation& out) {
  const std::size_t n = pick(rng, 2, lim.max_vertices);
  std::vector<std::size_t> out_deg(n, 0), in_deg(n, 0);
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  auto try_add = [&](std::size_t s, std::size_t t) {
    if (s == t || out_deg[s] >= 2 || in_deg[t] >= 2) return false;
    edges.emplace_back(s, t);
    ++out_deg[s];
    ++in_deg[t];
    return true;
  };
  // Random spanning tree with random orientations keeps the quiver connected.
  for (std::size_t v = 1; v < n; ++v) {
    bool added = false;
    for (int tries = 0; tries < 8 && !added; ++tries) {
      std::size_t u = pick(rng, 0, v - 1);
      added = pick(rng, 0, 1) ? try_add(u, v) : try_add(v, u);
    }
    if (!added) return false;
  }
  const std::size_t target = pick(rng, n - 1, std::min(lim.max_arrows, 2 * n));
  for (int tries = 0; edges.size() < target && tries < 40; ++tries) {
    try_add(pick(rng, 0, n - 1), pick(rng, 0, n - 1));
  }

  std::vector<VertexId> vids;
  for (std::size_t v = 0; v < n; ++v) vids.push_back("v" + std::to_string(v));
  std::vector<ArrowSpec> specs;
  for (std::size_t a = 0; a < edges.size(); ++a) {
    specs.push_back({"a" + std::to_string(a), vids[edges[a].first], vids[edges[a].second]});
  }
  Quiver q(vids, specs);

  // Length-two zeros forced by the unique-continuation condition.
  std::vector<Path> zeros;
  auto has_zero = [&](ArrowIndex a, ArrowIndex b) {
    return std::find(zeros.begin(), zeros.end(), Path{{a, b}}) != zeros.end();
  };
  for (ArrowIndex a = 0; a < q.arrow_count(); ++a) {
    const auto& next = q.out_arrows(q.target(a));
    if (next.size() == 2 && !has_zero(a, next[0]) && !has_zero(a, next[1])) {
      zeros.push_back(Path{{a, next[pick(rng, 0, 1)]}});
    }
  }
  for (ArrowIndex b = 0; b < q.arrow_count(); ++b) {
    const auto& prev = q.in_arrows(q.source(b));
    if (prev.size() == 2 && !has_zero(prev[0], b) && !has_zero(prev[1], b)) {
      zeros.push_back(Path{{prev[pick(rng, 0, 1)], b}});
    }
  }
  // A few extra relations of length two or three along random paths.
  const std::size_t extra = pick(rng, 0, 3);
  for (std::size_t k = 0; k < extra; ++k) {
    ArrowIndex a = pick(rng, 0, q.arrow_count() - 1);
    Path path{{a}};
    const std::size_t len = pick(rng, 2, 3);
    while (path.length() < len) {
      const auto& next = q.out_arrows(q.target(path.arrows.back()));
      if (next.empty()) break;
      path.arrows.push_back(next[pick(rng, 0, next.size() - 1)]);
    }
    if (path.length() >= 2) zeros.push_back(std::move(path));
  }
  zeros = minimalize_zero_set(std::move(zeros));
  if (zeros.size() > lim.max_relations) return false;
  try {
    out = Presentation(name, std::move(q), std::move(zeros));
  } catch (const SemanticError&) {
    return false;  // infinite dimensional
  }
  return validate_string_algebra(out).ok();
}

}  // namespace detail

/// A connected monomial string algebra within the limits, drawn from `rng`.
inline Presentation random_string_algebra(std::mt19937_64& rng, const std::string& name,
                                          const RandomLimits& lim = {}) {
  Presentation p;
  for (int attempt = 0; attempt < 10000; ++attempt) {
    if (detail::try_random_string_algebra(rng, lim, name, p)) return p;
  }
  throw AnomalyError("random generator failed to produce a string algebra");
}

/// `count` instances from one seeded stream; identical seeds give identical
/// corpora.
inline std::vector<Presentation> random_corpus(std::uint64_t seed, std::size_t count,
                                               const RandomLimits& lim = {}) {
  std::mt19937_64 rng(seed);
  std::vector<Presentation> out;
  for (std::size_t i = 0; i < count; ++i) {
    out.push_back(random_string_algebra(rng, "random_" + std::to_string(seed) + "_" +
                                                 std::to_string(i), lim));
  }
  return out;
}

/// The same bound quiver under a random renaming of vertices and arrows.
inline Presentation relabel(const Presentation& p, std::mt19937_64& rng) {
  const Quiver& q = p.quiver();
  std::vector<std::size_t> vp(q.vertex_count()), ap(q.arrow_count());
  std::iota(vp.begin(), vp.end(), 0);
  std::iota(ap.begin(), ap.end(), 0);
  std::shuffle(vp.begin(), vp.end(), rng);
  std::shuffle(ap.begin(), ap.end(), rng);
  auto vname = [&](Vertex v) { return "u" + std::to_string(vp[v]); };
  auto aname = [&](ArrowIndex a) { return "b" + std::to_string(ap[a]); };
  std::vector<VertexId> vids;
  for (Vertex v = 0; v < q.vertex_count(); ++v) vids.push_back(vname(v));
  std::vector<ArrowSpec> specs;
  for (ArrowIndex a = 0; a < q.arrow_count(); ++a) {
    specs.push_back({aname(a), vname(q.source(a)), vname(q.target(a))});
  }
  auto ids = [&](const Path& path) {
    std::vector<std::string> out;
    for (ArrowIndex a : path.arrows) out.push_back(aname(a));
    return out;
  };
  std::vector<std::vector<std::string>> zs;
  for (const auto& z : p.zeros()) zs.push_back(ids(z));
  std::vector<std::pair<std::vector<std::string>, std::vector<std::string>>> cs;
  for (const auto& c : p.comms()) cs.emplace_back(ids(c.left), ids(c.right));
  return make_presentation(p.name(), vids, specs, zs, cs);
}

}  // namespace laura
