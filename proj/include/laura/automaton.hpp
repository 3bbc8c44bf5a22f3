#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <queue>
#include <unordered_map>
#include <utility>
#include <vector>

#include "laura/aho_corasick.hpp"
#include "laura/error.hpp"
#include "laura/presentation.hpp"
#include "laura/walk.hpp"

namespace laura {

/// Deterministic automaton whose accepted walks are exactly the strings of a
/// monomial presentation.
///
/// A state is the last letter read together with the Aho-Corasick state of a
/// matcher whose patterns are the zero generators read forwards (as direct
/// letters) and backwards (as inverse letters). A run of one direction can
/// only match patterns of that direction, so a walk is a string iff it is
/// reduced and the matcher never reports a match. States 0..|Q0|-1 are the
/// trivial walks.
class StringAutomaton {
 public:
  using StateId = std::uint32_t;
  using Progress = MultiPatternMatcher::State;

  struct State {
    Vertex at;
    std::optional<Letter> last;
    Progress progress;
  };

  explicit StringAutomaton(const Presentation& p) : quiver_(p.quiver()) {
    if (!p.is_monomial()) {
      throw PreconditionError("string automaton needs a monomial presentation");
    }
    const Quiver& q = p.quiver();
    std::vector<std::vector<std::size_t>> patterns;
    for (const auto& z : p.zeros()) {
      std::vector<std::size_t> forward, backward;
      for (ArrowIndex a : z.arrows) forward.push_back(Letter::direct(a).code());
      for (auto it = z.arrows.rbegin(); it != z.arrows.rend(); ++it) {
        backward.push_back(Letter::inverse_of(*it).code());
      }
      patterns.push_back(std::move(forward));
      patterns.push_back(std::move(backward));
    }
    matcher_ = MultiPatternMatcher(2 * q.arrow_count(), patterns);

    for (Vertex v = 0; v < q.vertex_count(); ++v) {
      states_.push_back({v, std::nullopt, MultiPatternMatcher::root});
    }
    edges_.resize(states_.size());
    std::unordered_map<std::uint64_t, StateId> index;
    const std::uint64_t width = matcher_.state_count();
    std::queue<StateId> queue;
    for (StateId s = 0; s < states_.size(); ++s) queue.push(s);
    while (!queue.empty()) {
      StateId s = queue.front();
      queue.pop();
      for (Letter l : letters_from(q, states_[s].at)) {
        if (states_[s].last && *states_[s].last == l.inverse()) continue;
        Progress next = matcher_.step(states_[s].progress, l.code());
        if (matcher_.matched(next)) continue;
        std::uint64_t key = l.code() * width + next;
        auto [it, fresh] = index.emplace(key, static_cast<StateId>(states_.size()));
        if (fresh) {
          states_.push_back({letter_target(q, l), l, next});
          edges_.emplace_back();
          queue.push(it->second);
        }
        edges_[s].push_back({l, it->second});
      }
    }
    compute_cycles();
  }

  std::size_t size() const noexcept { return states_.size(); }
  const State& state(StateId s) const { return states_.at(s); }
  StateId initial(Vertex v) const { return static_cast<StateId>(v); }
  const Quiver& quiver() const noexcept { return quiver_; }
  const MultiPatternMatcher& matcher() const noexcept { return matcher_; }

  /// Outgoing transitions in letter order.
  const std::vector<std::pair<Letter, StateId>>& successors(StateId s) const {
    return edges_.at(s);
  }

  std::optional<StateId> step(StateId s, Letter l) const {
    for (const auto& [letter, t] : edges_.at(s)) {
      if (letter == l) return t;
    }
    return std::nullopt;
  }

  std::optional<StateId> feed(StateId s, const Word& word) const {
    std::optional<StateId> cur = s;
    for (Letter l : word) {
      cur = step(*cur, l);
      if (!cur) return std::nullopt;
    }
    return cur;
  }

  bool accepts(const Walk& w) const {
    if (w.base >= quiver_.vertex_count()) return false;
    return feed(initial(w.base), w.letters).has_value();
  }

  /// True if the state lies on a cycle of length >= 1.
  bool on_cycle(StateId s) const { return on_cycle_.at(s); }
  bool has_cycle() const {
    return std::find(on_cycle_.begin(), on_cycle_.end(), true) != on_cycle_.end();
  }
  std::size_t component(StateId s) const { return component_.at(s); }

 private:
  static std::vector<Letter> letters_from(const Quiver& q, Vertex v) {
    std::vector<Letter> out;
    for (ArrowIndex a : q.out_arrows(v)) out.push_back(Letter::direct(a));
    for (ArrowIndex a : q.in_arrows(v)) out.push_back(Letter::inverse_of(a));
    std::sort(out.begin(), out.end());
    return out;
  }

  // Iterative Tarjan.
  void compute_cycles() {
    const std::size_t n = states_.size();
    constexpr std::size_t unvisited = static_cast<std::size_t>(-1);
    std::vector<std::size_t> order(n, unvisited), low(n, 0);
    std::vector<bool> on_stack(n, false);
    std::vector<StateId> stack;
    component_.assign(n, unvisited);
    on_cycle_.assign(n, false);
    std::size_t counter = 0, components = 0;
    struct Frame {
      StateId s;
      std::size_t child;
    };
    for (StateId root = 0; root < n; ++root) {
      if (order[root] != unvisited) continue;
      std::vector<Frame> frames{{root, 0}};
      order[root] = low[root] = counter++;
      stack.push_back(root);
      on_stack[root] = true;
      while (!frames.empty()) {
        Frame& f = frames.back();
        if (f.child < edges_[f.s].size()) {
          StateId t = edges_[f.s][f.child++].second;
          if (order[t] == unvisited) {
            order[t] = low[t] = counter++;
            stack.push_back(t);
            on_stack[t] = true;
            frames.push_back({t, 0});
          } else if (on_stack[t]) {
            low[f.s] = std::min(low[f.s], order[t]);
          }
          continue;
        }
        StateId s = f.s;
        frames.pop_back();
        if (!frames.empty()) {
          low[frames.back().s] = std::min(low[frames.back().s], low[s]);
        }
        if (low[s] == order[s]) {
          std::vector<StateId> members;
          StateId t;
          do {
            t = stack.back();
            stack.pop_back();
            on_stack[t] = false;
            component_[t] = components;
            members.push_back(t);
          } while (t != s);
          bool cyclic = members.size() > 1;
          if (!cyclic) {
            for (const auto& e : edges_[s]) cyclic = cyclic || e.second == s;
          }
          for (StateId m : members) on_cycle_[m] = cyclic;
          ++components;
        }
      }
    }
  }

  Quiver quiver_;
  MultiPatternMatcher matcher_;
  std::vector<State> states_;
  std::vector<std::vector<std::pair<Letter, StateId>>> edges_;
  std::vector<bool> on_cycle_;
  std::vector<std::size_t> component_;
};

}  // namespace laura
