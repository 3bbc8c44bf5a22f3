#pragma once

#include <algorithm>
#include <cstddef>
#include <queue>
#include <set>
#include <vector>

#include "laura/automaton.hpp"
#include "laura/error.hpp"
#include "laura/presentation.hpp"
#include "laura/walk.hpp"

namespace laura {

inline bool is_reduced(const Word& word) {
  for (std::size_t i = 0; i + 1 < word.size(); ++i) {
    if (word[i + 1] == word[i].inverse()) return false;
  }
  return true;
}

inline bool is_reduced(const Walk& w) { return is_reduced(w.letters); }

namespace detail {

inline void require_monomial(const Presentation& p, const char* op) {
  if (!p.is_monomial()) {
    throw PreconditionError(std::string(op) +
                            " needs a monomial presentation (quotient by J)");
  }
}

// Oriented path read off a maximal run: inverse runs are read against the
// walk direction.
inline std::vector<ArrowIndex> run_path(const Word& word, std::size_t begin,
                                        std::size_t end) {
  std::vector<ArrowIndex> out;
  for (std::size_t i = begin; i < end; ++i) out.push_back(word[i].arrow);
  if (!word[begin].is_direct()) std::reverse(out.begin(), out.end());
  return out;
}

}  // namespace detail

/// Reduced, and no maximal same-direction run contains a zero generator.
/// Checked directly from the definition, independently of the automaton.
inline bool is_string_word(const Presentation& p, const Word& word) {
  if (!is_reduced(word)) return false;
  std::size_t begin = 0;
  while (begin < word.size()) {
    std::size_t end = begin + 1;
    while (end < word.size() && word[end].dir == word[begin].dir) ++end;
    if (p.contains_zero(detail::run_path(word, begin, end))) return false;
    begin = end;
  }
  return true;
}

inline bool is_string(const Presentation& p, const Walk& w) {
  detail::require_monomial(p, "is_string");
  return is_walk(p.quiver(), w) && is_string_word(p, w.letters);
}

/// Primitive cyclic string all of whose powers are strings. Every rotation of
/// c^k is tested, with k large enough that a window covers one generator
/// plus a full period.
inline bool is_band(const Presentation& p, const CyclicWalk& c) {
  detail::require_monomial(p, "is_band");
  const Quiver& q = p.quiver();
  if (!is_walk(q, c.walk) || !is_closed(q, c.walk)) return false;
  if (!is_primitive(c.walk.letters)) return false;
  const std::size_t n = c.length();
  const std::size_t g = p.max_zero_length();
  const std::size_t k = std::max<std::size_t>(2, (g + n - 1) / n + 1);
  for (std::size_t r = 0; r < n; ++r) {
    Walk w = power(rotate(q, c, r), k);
    if (!is_string_word(p, w.letters)) return false;
  }
  return true;
}

/// The number of automaton states: the pumping length used by every bounded
/// search in the library.
inline std::size_t pumping_bound(const Presentation& p) {
  return StringAutomaton(p).size();
}

/// All strings of length <= max_len, one per {w, w^-1}, in canonical order.
inline std::vector<Walk> enumerate_strings(const Presentation& p,
                                           std::size_t max_len) {
  detail::require_monomial(p, "enumerate_strings");
  StringAutomaton aut(p);
  const Quiver& q = p.quiver();
  std::vector<Walk> out;
  for (Vertex v = 0; v < q.vertex_count(); ++v) {
    out.push_back({v, {}});
    struct Frame {
      StringAutomaton::StateId s;
      std::size_t child;
    };
    std::vector<Frame> stack{{aut.initial(v), 0}};
    Word word;
    while (!stack.empty()) {
      Frame& f = stack.back();
      const auto& succ = aut.successors(f.s);
      if (word.size() == max_len || f.child == succ.size()) {
        stack.pop_back();
        if (!word.empty()) word.pop_back();
        continue;
      }
      auto [letter, t] = succ[f.child++];
      word.push_back(letter);
      if (!(inverse_word(word) < word)) out.push_back({v, word});
      stack.push_back({t, 0});
    }
  }
  std::sort(out.begin(), out.end(), WalkLess{});
  return out;
}

inline bool exists_band(const Presentation& p) {
  detail::require_monomial(p, "exists_band");
  return StringAutomaton(p).has_cycle();
}

/// Bands of length <= max_len up to rotation and inversion, canonical order.
///
/// Bands are the primitive words read along automaton cycles; each cycle is
/// searched from every state on it, restricted to the state's strongly
/// connected component and pruned by the distance back to the start.
inline std::vector<CyclicWalk> enumerate_bands(const Presentation& p,
                                               std::size_t max_len) {
  detail::require_monomial(p, "enumerate_bands");
  StringAutomaton aut(p);
  const Quiver& q = p.quiver();
  using StateId = StringAutomaton::StateId;
  const std::size_t n = aut.size();
  std::vector<std::vector<StateId>> preds(n);
  for (StateId s = 0; s < n; ++s) {
    for (const auto& e : aut.successors(s)) preds[e.second].push_back(s);
  }
  constexpr std::size_t far = static_cast<std::size_t>(-1);
  std::vector<CyclicWalk> found;
  std::set<Word> seen;
  for (StateId start = 0; start < n; ++start) {
    if (!aut.on_cycle(start)) continue;
    // Distance from each state of the component back to `start`.
    std::vector<std::size_t> dist(n, far);
    std::queue<StateId> bfs;
    dist[start] = 0;
    bfs.push(start);
    while (!bfs.empty()) {
      StateId t = bfs.front();
      bfs.pop();
      for (StateId u : preds[t]) {
        if (dist[u] == far && aut.component(u) == aut.component(start)) {
          dist[u] = dist[t] + 1;
          bfs.push(u);
        }
      }
    }
    struct Frame {
      StateId s;
      std::size_t child;
    };
    std::vector<Frame> stack{{start, 0}};
    Word word;
    while (!stack.empty()) {
      Frame& f = stack.back();
      const auto& succ = aut.successors(f.s);
      if (f.child == succ.size()) {
        stack.pop_back();
        if (!word.empty()) word.pop_back();
        continue;
      }
      auto [letter, t] = succ[f.child++];
      if (dist[t] == far || word.size() + 1 + dist[t] > max_len) continue;
      word.push_back(letter);
      if (t == start) {
        if (is_primitive(word)) {
          CyclicWalk c{{aut.state(start).at, word}};
          CyclicWalk canon = canonical_band(q, c);
          if (seen.insert(canon.walk.letters).second) {
            if (!is_band(p, canon)) {
              throw AnomalyError("automaton cycle " + render_band(q, canon) +
                                 " is not a band");
            }
            found.push_back(std::move(canon));
          }
        }
        word.pop_back();
        continue;
      }
      stack.push_back({t, 0});
    }
  }
  std::sort(found.begin(), found.end(),
            [](const CyclicWalk& a, const CyclicWalk& b) {
              return WalkLess{}(a.walk, b.walk);
            });
  return found;
}

struct BandBoundary {
  std::set<ArrowIndex> entering;
  std::set<ArrowIndex> exiting;
};

inline std::set<ArrowIndex> arrows_of(const Walk& w) {
  std::set<ArrowIndex> out;
  for (Letter l : w.letters) out.insert(l.arrow);
  return out;
}

inline std::set<Vertex> vertices_of(const Quiver& q, const Walk& w) {
  auto ps = passages(q, w);
  return {ps.begin(), ps.end()};
}

/// Off-band arrows ending on the band (entering) or starting on it (exiting).
inline BandBoundary band_boundary(const Presentation& p, const CyclicWalk& b) {
  const Quiver& q = p.quiver();
  auto on_band = arrows_of(b.walk);
  auto verts = vertices_of(q, b.walk);
  BandBoundary out;
  for (ArrowIndex a = 0; a < q.arrow_count(); ++a) {
    if (on_band.count(a)) continue;
    if (verts.count(q.target(a))) out.entering.insert(a);
    if (verts.count(q.source(a))) out.exiting.insert(a);
  }
  return out;
}

}  // namespace laura
