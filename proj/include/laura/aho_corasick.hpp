#pragma once

#include <cstddef>
#include <cstdint>
#include <queue>
#include <vector>

namespace laura {

/// Aho-Corasick matcher over a dense integer alphabet [0, alphabet_size).
///
/// The goto function is completed into a full transition table, so `step`
/// is a single lookup. A state is `matched` when some pattern ends at the
/// current position (directly or through the dictionary suffix chain).
class MultiPatternMatcher {
 public:
  using State = std::uint32_t;
  static constexpr State root = 0;

  MultiPatternMatcher() : MultiPatternMatcher(0, {}) {}

  MultiPatternMatcher(std::size_t alphabet_size,
                      const std::vector<std::vector<std::size_t>>& patterns)
      : alphabet_(alphabet_size) {
    add_node(0, 0);
    for (const auto& pattern : patterns) {
      State s = root;
      for (std::size_t sym : pattern) {
        if (goto_[index(s, sym)] == none) {
          State fresh = add_node(depth_[s] + 1, sym);
          goto_[index(s, sym)] = fresh;
        }
        s = goto_[index(s, sym)];
      }
      if (!pattern.empty()) matched_[s] = true;
    }
    build_failure_links();
  }

  State step(State s, std::size_t symbol) const {
    return goto_[index(s, symbol)];
  }

  bool matched(State s) const { return matched_[s]; }
  std::size_t depth(State s) const { return depth_[s]; }
  std::size_t state_count() const { return depth_.size(); }
  std::size_t alphabet_size() const { return alphabet_; }

  /// Symbol on the trie edge into s (meaningless for the root).
  std::size_t last_symbol(State s) const { return symbol_[s]; }

 private:
  static constexpr State none = static_cast<State>(-1);

  std::size_t index(State s, std::size_t sym) const {
    return static_cast<std::size_t>(s) * alphabet_ + sym;
  }

  State add_node(std::size_t depth, std::size_t sym) {
    auto id = static_cast<State>(depth_.size());
    depth_.push_back(depth);
    symbol_.push_back(sym);
    matched_.push_back(false);
    fail_.push_back(root);
    goto_.resize(goto_.size() + alphabet_, none);
    return id;
  }

  void build_failure_links() {
    std::queue<State> queue;
    for (std::size_t c = 0; c < alphabet_; ++c) {
      State& next = goto_[index(root, c)];
      if (next == none) {
        next = root;
      } else {
        fail_[next] = root;
        queue.push(next);
      }
    }
    while (!queue.empty()) {
      State s = queue.front();
      queue.pop();
      if (matched_[fail_[s]]) matched_[s] = true;
      for (std::size_t c = 0; c < alphabet_; ++c) {
        State& next = goto_[index(s, c)];
        if (next == none) {
          next = goto_[index(fail_[s], c)];
        } else {
          fail_[next] = goto_[index(fail_[s], c)];
          queue.push(next);
        }
      }
    }
  }

  std::size_t alphabet_;
  std::vector<State> goto_;
  std::vector<State> fail_;
  std::vector<std::size_t> depth_;
  std::vector<std::size_t> symbol_;
  std::vector<bool> matched_;
};

}  // namespace laura
