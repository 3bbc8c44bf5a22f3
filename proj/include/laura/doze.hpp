#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <queue>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "laura/automaton.hpp"
#include "laura/error.hpp"
#include "laura/presentation.hpp"
#include "laura/strings.hpp"
#include "laura/walk.hpp"

namespace laura {

/// rho1 . middle . rho2 with both zero generators traversed directly, the
/// whole walk reduced, and the interior (drop the first arrow of rho1 and the
/// last arrow of rho2) a string.
struct DoubleZero {
  Path rho1;
  Walk middle;
  Path rho2;
  Walk whole;
};

/// rho1 . w1 . band^n . w3 . rho2 is a double-zero for every n >= 0.
struct DozeWitness {
  Path rho1;
  Walk w1;
  CyclicWalk band;
  Walk w3;
  Path rho2;

  Walk middle(std::size_t n) const {
    Walk m = w1;
    Walk b = power(band, n);
    m.letters.insert(m.letters.end(), b.letters.begin(), b.letters.end());
    m.letters.insert(m.letters.end(), w3.letters.begin(), w3.letters.end());
    return m;
  }

  Walk assembled(const Quiver& q, std::size_t n) const {
    Walk whole = path_walk(q, rho1);
    Walk m = middle(n);
    whole.letters.insert(whole.letters.end(), m.letters.begin(), m.letters.end());
    for (ArrowIndex a : rho2.arrows) whole.letters.push_back(Letter::direct(a));
    return whole;
  }
};

namespace detail {

inline Word direct_word(const std::vector<ArrowIndex>& arrows, std::size_t begin,
                        std::size_t end) {
  Word w;
  for (std::size_t i = begin; i < end; ++i) w.push_back(Letter::direct(arrows[i]));
  return w;
}

// alpha_2 ... alpha_l
inline Word rho_tail(const Path& rho) {
  return direct_word(rho.arrows, 1, rho.arrows.size());
}

// beta_m ... beta_2: rho2 without its last arrow.
inline Word rho_head(const Path& rho) {
  return direct_word(rho.arrows, 0, rho.arrows.size() - 1);
}

inline Word interior_word(const Path& rho1, const Word& middle, const Path& rho2) {
  Word w = rho_tail(rho1);
  w.insert(w.end(), middle.begin(), middle.end());
  Word h = rho_head(rho2);
  w.insert(w.end(), h.begin(), h.end());
  return w;
}

inline bool is_generator(const Presentation& p, const Path& rho) {
  return std::find(p.zeros().begin(), p.zeros().end(), rho) != p.zeros().end();
}

}  // namespace detail

inline bool is_double_zero(const Presentation& p, const Path& rho1,
                           const Walk& middle, const Path& rho2) {
  detail::require_monomial(p, "is_double_zero");
  const Quiver& q = p.quiver();
  if (!detail::is_generator(p, rho1) || !detail::is_generator(p, rho2)) {
    return false;
  }
  if (!is_walk(q, middle) || middle.base != path_target(q, rho1) ||
      end_vertex(q, middle) != path_source(q, rho2)) {
    return false;
  }
  Word whole = detail::direct_word(rho1.arrows, 0, rho1.length());
  whole.insert(whole.end(), middle.letters.begin(), middle.letters.end());
  Word tail = detail::direct_word(rho2.arrows, 0, rho2.length());
  whole.insert(whole.end(), tail.begin(), tail.end());
  if (!is_reduced(whole)) return false;
  return is_string_word(p, detail::interior_word(rho1, middle.letters, rho2));
}

inline bool is_doze_witness(const Presentation& p, const DozeWitness& w,
                            std::size_t n) {
  return is_band(p, w.band) &&
         is_double_zero(p, w.rho1, w.middle(n), w.rho2);
}

namespace detail {

// Automaton view of double-zeros: the tail of rho1 is fed from the trivial
// state, the middle is any automaton walk, and rho2 completes from a state Y
// when its head can be fed from Y.
struct DoubleZeroSearch {
  using StateId = StringAutomaton::StateId;

  const Presentation& p;
  StringAutomaton aut;
  std::vector<std::optional<StateId>> start;         // per zero generator
  std::vector<std::vector<std::size_t>> completes;   // per state: rho2 indices
  std::vector<bool> coreachable;                     // can still complete

  explicit DoubleZeroSearch(const Presentation& pres) : p(pres), aut(pres) {
    const Quiver& q = p.quiver();
    const auto& zeros = p.zeros();
    for (const auto& z : zeros) {
      start.push_back(aut.feed(aut.initial(q.target(z.arrows[0])), rho_tail(z)));
    }
    const std::size_t n = aut.size();
    completes.assign(n, {});
    std::vector<std::vector<StateId>> preds(n);
    for (StateId s = 0; s < n; ++s) {
      for (const auto& e : aut.successors(s)) preds[e.second].push_back(s);
      for (std::size_t j = 0; j < zeros.size(); ++j) {
        if (aut.state(s).at == q.source(zeros[j].arrows[0]) &&
            aut.feed(s, rho_head(zeros[j]))) {
          completes[s].push_back(j);
        }
      }
    }
    coreachable.assign(n, false);
    std::queue<StateId> bfs;
    for (StateId s = 0; s < n; ++s) {
      if (!completes[s].empty()) {
        coreachable[s] = true;
        bfs.push(s);
      }
    }
    while (!bfs.empty()) {
      StateId t = bfs.front();
      bfs.pop();
      for (StateId u : preds[t]) {
        if (!coreachable[u]) {
          coreachable[u] = true;
          bfs.push(u);
        }
      }
    }
  }

  // Breadth-first tree from `from`; parent[s] = (predecessor, letter).
  struct Tree {
    std::vector<std::size_t> dist;
    std::vector<std::pair<StateId, Letter>> parent;
  };

  static constexpr std::size_t far = static_cast<std::size_t>(-1);

  Tree bfs_from(StateId from) const {
    Tree t{std::vector<std::size_t>(aut.size(), far),
           std::vector<std::pair<StateId, Letter>>(aut.size())};
    std::queue<StateId> queue;
    t.dist[from] = 0;
    queue.push(from);
    while (!queue.empty()) {
      StateId s = queue.front();
      queue.pop();
      for (const auto& [l, u] : aut.successors(s)) {
        if (t.dist[u] == far) {
          t.dist[u] = t.dist[s] + 1;
          t.parent[u] = {s, l};
          queue.push(u);
        }
      }
    }
    return t;
  }

  static Word trace(const Tree& t, StateId from, StateId to) {
    Word w;
    while (to != from) {
      w.push_back(t.parent[to].second);
      to = t.parent[to].first;
    }
    std::reverse(w.begin(), w.end());
    return w;
  }

  // Shortest nonempty cycle through s (s must be on a cycle).
  Word shortest_cycle(StateId s) const {
    Tree best;
    std::size_t best_len = far;
    StateId best_pred = 0;
    Letter best_letter;
    Tree t = bfs_from(s);
    for (StateId u = 0; u < aut.size(); ++u) {
      if (t.dist[u] == far) continue;
      for (const auto& [l, v] : aut.successors(u)) {
        if (v == s && t.dist[u] + 1 < best_len) {
          best_len = t.dist[u] + 1;
          best_pred = u;
          best_letter = l;
        }
      }
    }
    Word w = trace(t, s, best_pred);
    w.push_back(best_letter);
    return w;
  }
};

}  // namespace detail

/// All double-zeros of total length <= max_len in canonical order.
inline std::vector<DoubleZero> find_double_zeros(const Presentation& p,
                                                 std::size_t max_len) {
  detail::require_monomial(p, "find_double_zeros");
  detail::DoubleZeroSearch search(p);
  const Quiver& q = p.quiver();
  const auto& zeros = p.zeros();
  using StateId = StringAutomaton::StateId;
  std::vector<DoubleZero> out;
  for (std::size_t i = 0; i < zeros.size(); ++i) {
    if (!search.start[i] || !search.coreachable[*search.start[i]]) continue;
    const Path& rho1 = zeros[i];
    if (rho1.length() + 2 > max_len) continue;
    const std::size_t budget = max_len - rho1.length();
    struct Frame {
      StateId s;
      std::size_t child;
    };
    std::vector<Frame> stack{{*search.start[i], 0}};
    Word middle;
    auto emit = [&](StateId s) {
      for (std::size_t j : search.completes[s]) {
        if (middle.size() + zeros[j].length() > budget) continue;
        Walk m{path_target(q, rho1), middle};
        DoubleZero dz{rho1, m, zeros[j], path_walk(q, rho1)};
        dz.whole.letters.insert(dz.whole.letters.end(), middle.begin(), middle.end());
        for (ArrowIndex a : zeros[j].arrows) dz.whole.letters.push_back(Letter::direct(a));
        out.push_back(std::move(dz));
      }
    };
    emit(*search.start[i]);
    while (!stack.empty()) {
      Frame& f = stack.back();
      const auto& succ = search.aut.successors(f.s);
      if (f.child == succ.size()) {
        stack.pop_back();
        if (!middle.empty()) middle.pop_back();
        continue;
      }
      auto [letter, t] = succ[f.child++];
      // The shortest rho2 has length 2.
      if (!search.coreachable[t] || middle.size() + 1 + 2 > budget) continue;
      middle.push_back(letter);
      emit(t);
      stack.push_back({t, 0});
    }
  }
  std::sort(out.begin(), out.end(), [](const DoubleZero& a, const DoubleZero& b) {
    return WalkLess{}(a.whole, b.whole);
  });
  out.erase(std::unique(out.begin(), out.end(),
                        [](const DoubleZero& a, const DoubleZero& b) {
                          return a.whole == b.whole;
                        }),
            out.end());
  return out;
}

/// Exact: does any double-zero exist (no length bound)?
inline bool has_double_zero(const Presentation& p) {
  detail::require_monomial(p, "has_double_zero");
  detail::DoubleZeroSearch search(p);
  for (const auto& s : search.start) {
    if (s && search.coreachable[*s]) return true;
  }
  return false;
}

/// Exact DOZE decision. A DOZE exists iff, for some generators rho1 and rho2,
/// an automaton state on a nontrivial cycle is reachable from the state after
/// rho1's tail and can reach a state from which rho2 completes. The witness
/// is the shortest such assembly: BFS path to the cycle state, shortest cycle
/// (reduced to its primitive root), BFS path to the first completing state.
inline std::optional<DozeWitness> find_doze(const Presentation& p) {
  detail::require_monomial(p, "find_doze");
  detail::DoubleZeroSearch search(p);
  const Quiver& q = p.quiver();
  const auto& zeros = p.zeros();
  using StateId = StringAutomaton::StateId;
  std::optional<DozeWitness> best;
  std::size_t best_len = detail::DoubleZeroSearch::far;
  for (std::size_t i = 0; i < zeros.size(); ++i) {
    if (!search.start[i] || !search.coreachable[*search.start[i]]) continue;
    const StateId start = *search.start[i];
    auto to_cycle = search.bfs_from(start);
    for (StateId x = 0; x < search.aut.size(); ++x) {
      if (to_cycle.dist[x] == detail::DoubleZeroSearch::far ||
          !search.aut.on_cycle(x) || !search.coreachable[x]) {
        continue;
      }
      Word w1 = detail::DoubleZeroSearch::trace(to_cycle, start, x);
      Word cycle = primitive_root(search.shortest_cycle(x));
      auto from_cycle = search.bfs_from(x);
      StateId y = x;
      std::size_t y_dist = detail::DoubleZeroSearch::far;
      for (StateId s = 0; s < search.aut.size(); ++s) {
        if (!search.completes[s].empty() &&
            from_cycle.dist[s] < y_dist) {
          y = s;
          y_dist = from_cycle.dist[s];
        }
      }
      const Path& rho2 = zeros[search.completes[y].front()];
      Word w3 = detail::DoubleZeroSearch::trace(from_cycle, x, y);
      std::size_t len = zeros[i].length() + w1.size() + cycle.size() +
                        w3.size() + rho2.length();
      if (len >= best_len) continue;
      Vertex at = search.aut.state(x).at;
      best_len = len;
      best = DozeWitness{zeros[i], Walk{path_target(q, zeros[i]), w1},
                         CyclicWalk{Walk{at, cycle}}, Walk{at, w3}, rho2};
    }
  }
  if (best) {
    for (std::size_t n : {0u, 1u}) {
      if (!is_doze_witness(p, *best, n)) {
        throw AnomalyError("assembled DOZE witness fails the double-zero check");
      }
    }
  }
  return best;
}

struct BruteforceOptions {
  // When set, receives double-zeros whose whole walk contains a band factor
  // overlapping rho1 or rho2 while no strict factorization exists.
  std::vector<Walk>* overlap_only = nullptr;
};

/// Independent oracle for find_doze: enumerates double-zeros layer by layer
/// in middle length with a direct incremental string test (no automaton),
/// and tries every factorization middle = w1 . c . w3 with c a band.
inline std::optional<DozeWitness> find_doze_bruteforce(
    const Presentation& p, std::size_t max_len, BruteforceOptions opts = {}) {
  detail::require_monomial(p, "find_doze_bruteforce");
  const Quiver& q = p.quiver();
  const auto& zeros = p.zeros();

  // Does a zero generator end at the last letter of `w`?
  auto last_run_clean = [&](const Word& w) {
    const std::size_t n = w.size();
    const Direction d = w.back().dir;
    std::size_t run = 0;
    while (run < n && w[n - 1 - run].dir == d) ++run;
    for (const auto& z : zeros) {
      const std::size_t k = z.length();
      if (k > run) continue;
      bool equal = true;
      for (std::size_t t = 0; t < k && equal; ++t) {
        // Direct runs read forwards, inverse runs backwards.
        ArrowIndex a = d == Direction::Direct ? w[n - k + t].arrow
                                              : w[n - 1 - t].arrow;
        equal = a == z.arrows[t];
      }
      if (equal) return false;
    }
    return true;
  };
  auto extend = [&](Word& interior, Letter l) {
    if (!interior.empty() && interior.back() == l.inverse()) return false;
    interior.push_back(l);
    if (!last_run_clean(interior)) {
      interior.pop_back();
      return false;
    }
    return true;
  };

  struct Node {
    std::size_t rho1;
    Word interior;  // tail(rho1) . middle
    Vertex at;
  };
  std::vector<Node> layer;
  for (std::size_t i = 0; i < zeros.size(); ++i) {
    Word interior;
    bool ok = true;
    for (std::size_t k = 1; k < zeros[i].length() && ok; ++k) {
      ok = extend(interior, Letter::direct(zeros[i].arrows[k]));
    }
    if (ok) layer.push_back({i, interior, path_target(q, zeros[i])});
  }

  std::size_t min_zero = 2;
  for (std::size_t m = 0; !layer.empty(); ++m) {
    for (const Node& node : layer) {
      const Path& rho1 = zeros[node.rho1];
      const std::size_t tail = rho1.length() - 1;
      if (rho1.length() + m + min_zero > max_len) continue;
      Word middle(node.interior.begin() + static_cast<std::ptrdiff_t>(tail),
                  node.interior.end());
      for (std::size_t j = 0; j < zeros.size(); ++j) {
        const Path& rho2 = zeros[j];
        if (rho1.length() + m + rho2.length() > max_len) continue;
        if (q.source(rho2.arrows[0]) != node.at) continue;
        Word interior = node.interior;
        bool ok = true;
        for (std::size_t k = 0; k + 1 < rho2.length() && ok; ++k) {
          ok = extend(interior, Letter::direct(rho2.arrows[k]));
        }
        if (!ok) continue;
        // rho1 and rho2 are whole-walk reduced: their letters are direct, so
        // only the middle junctions matter, and `extend` checked those.
        Walk mid{path_target(q, rho1), middle};
        auto verts = passages(q, mid);
        for (std::size_t a = 0; a < m; ++a) {
          for (std::size_t b = a + 1; b <= m; ++b) {
            if (verts[a] != verts[b]) continue;
            CyclicWalk c{subwalk(q, mid, a, b - a)};
            if (!is_band(p, c)) continue;
            return DozeWitness{rho1, subwalk(q, mid, 0, a), c,
                               subwalk(q, mid, b, m - b), rho2};
          }
        }
        if (opts.overlap_only) {
          Walk whole = path_walk(q, rho1);
          whole.letters.insert(whole.letters.end(), middle.begin(), middle.end());
          for (ArrowIndex x : rho2.arrows) whole.letters.push_back(Letter::direct(x));
          auto wv = passages(q, whole);
          bool overlap = false;
          for (std::size_t a = 0; a < whole.length() && !overlap; ++a) {
            for (std::size_t b = a + 1; b <= whole.length() && !overlap; ++b) {
              if (wv[a] != wv[b]) continue;
              overlap = is_band(p, CyclicWalk{subwalk(q, whole, a, b - a)});
            }
          }
          if (overlap) opts.overlap_only->push_back(whole);
        }
      }
    }
    std::vector<Node> next;
    for (const Node& node : layer) {
      const std::size_t len = zeros[node.rho1].length() + m + 1;
      if (len + min_zero > max_len) continue;
      std::vector<Letter> letters;
      for (ArrowIndex a : q.out_arrows(node.at)) letters.push_back(Letter::direct(a));
      for (ArrowIndex a : q.in_arrows(node.at)) letters.push_back(Letter::inverse_of(a));
      std::sort(letters.begin(), letters.end());
      for (Letter l : letters) {
        Node child = node;
        if (!extend(child.interior, l)) continue;
        child.at = letter_target(q, l);
        next.push_back(std::move(child));
      }
    }
    layer = std::move(next);
  }
  return std::nullopt;
}

}  // namespace laura
