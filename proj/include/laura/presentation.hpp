#pragma once

#include <algorithm>
#include <cstddef>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "laura/aho_corasick.hpp"
#include "laura/error.hpp"
#include "laura/quiver.hpp"

namespace laura {

/// Binomial relation left = right between two parallel paths.
struct CommRelation {
  Path left;
  Path right;

  friend auto operator<=>(const CommRelation&, const CommRelation&) = default;
};

/// Drops every zero path that contains another one as a contiguous block,
/// removes duplicates, and sorts the survivors.
inline std::vector<Path> minimalize_zero_set(std::vector<Path> zeros) {
  std::sort(zeros.begin(), zeros.end(), [](const Path& a, const Path& b) {
    if (a.length() != b.length()) return a.length() < b.length();
    return a < b;
  });
  zeros.erase(std::unique(zeros.begin(), zeros.end()), zeros.end());
  std::vector<Path> kept;
  for (const auto& z : zeros) {
    bool redundant = std::any_of(kept.begin(), kept.end(), [&](const Path& k) {
      return contains_subpath(z.arrows, k.arrows);
    });
    if (!redundant) kept.push_back(z);
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

/// A bound quiver (Q, I). The ideal is given by minimal zero paths plus
/// commutativity relations. Construction enforces admissibility of the
/// generators and finite dimension of the algebra.
class Presentation {
 public:
  Presentation() = default;

  Presentation(std::string name, Quiver quiver, std::vector<Path> zeros,
               std::vector<CommRelation> comms = {})
      : name_(std::move(name)), quiver_(std::move(quiver)) {
    for (const auto& z : zeros) {
      if (!is_composable(quiver_, z)) {
        throw SemanticError("zero relation is not a composable path");
      }
      if (z.length() < 2) {
        throw SemanticError("zero relation '" + quiver_.arrow_id(z.arrows[0]) +
                            "' has length < 2");
      }
    }
    for (auto& c : comms) {
      if (!is_composable(quiver_, c.left) || !is_composable(quiver_, c.right)) {
        throw SemanticError("commutativity side is not a composable path");
      }
      if (c.left.length() < 2 || c.right.length() < 2) {
        throw SemanticError("commutativity side has length < 2");
      }
      if (path_source(quiver_, c.left) != path_source(quiver_, c.right) ||
          path_target(quiver_, c.left) != path_target(quiver_, c.right)) {
        throw SemanticError("commutativity sides are not parallel");
      }
      if (c.left == c.right) {
        throw SemanticError("commutativity sides are equal");
      }
      if (c.right < c.left) std::swap(c.left, c.right);
    }
    std::sort(comms.begin(), comms.end());
    comms.erase(std::unique(comms.begin(), comms.end()), comms.end());
    zeros_ = minimalize_zero_set(std::move(zeros));
    comms_ = std::move(comms);
    if (!finite_dimensional()) {
      throw SemanticError("algebra '" + name_ +
                          "' is infinite dimensional: some oriented cycle "
                          "avoids every zero relation");
    }
  }

  const std::string& name() const noexcept { return name_; }
  const Quiver& quiver() const noexcept { return quiver_; }
  const std::vector<Path>& zeros() const noexcept { return zeros_; }
  const std::vector<CommRelation>& comms() const noexcept { return comms_; }
  bool is_monomial() const noexcept { return comms_.empty(); }

  std::size_t max_zero_length() const {
    std::size_t m = 0;
    for (const auto& z : zeros_) m = std::max(m, z.length());
    return m;
  }

  std::size_t total_zero_length() const {
    std::size_t t = 0;
    for (const auto& z : zeros_) t += z.length();
    return t;
  }

  /// True iff `path` contains a zero generator as a contiguous block.
  bool contains_zero(const std::vector<ArrowIndex>& path) const {
    return std::any_of(zeros_.begin(), zeros_.end(), [&](const Path& z) {
      return contains_subpath(path, z.arrows);
    });
  }

  /// Presentation on a subset of vertices and arrows, keeping the zero
  /// generators all of whose arrows survive. Commutativity relations are
  /// kept when both sides survive.
  Presentation restrict(const std::set<Vertex>& vertices,
                        const std::set<ArrowIndex>& arrows,
                        std::string name = {}) const {
    Quiver sub = quiver_.restrict(vertices, arrows);
    auto translate = [&](const Path& p, Path& out) {
      for (ArrowIndex a : p.arrows) {
        if (!arrows.count(a)) return false;
        out.arrows.push_back(*sub.arrow_index(quiver_.arrow_id(a)));
      }
      return true;
    };
    std::vector<Path> zs;
    for (const auto& z : zeros_) {
      Path t;
      if (translate(z, t)) zs.push_back(std::move(t));
    }
    std::vector<CommRelation> cs;
    for (const auto& c : comms_) {
      CommRelation t;
      if (translate(c.left, t.left) && translate(c.right, t.right)) {
        cs.push_back(std::move(t));
      }
    }
    return Presentation(name.empty() ? name_ : std::move(name), std::move(sub),
                        std::move(zs), std::move(cs));
  }

 private:
  // Depth-first search over (last arrow, matcher state) for a cycle of paths
  // that never complete a zero generator.
  bool finite_dimensional() const {
    const std::size_t n = quiver_.arrow_count();
    if (n == 0) return true;
    std::vector<std::vector<std::size_t>> patterns;
    for (const auto& z : zeros_) patterns.push_back(z.arrows);
    MultiPatternMatcher matcher(n, patterns);
    const std::size_t states = matcher.state_count();
    auto key = [&](ArrowIndex a, MultiPatternMatcher::State s) {
      return a * states + s;
    };
    enum class Mark : unsigned char { White, Grey, Black };
    std::vector<Mark> mark(n * states, Mark::White);
    struct Frame {
      ArrowIndex arrow;
      MultiPatternMatcher::State state;
      std::size_t next_child;
    };
    for (ArrowIndex start = 0; start < n; ++start) {
      auto s0 = matcher.step(MultiPatternMatcher::root, start);
      if (mark[key(start, s0)] != Mark::White) continue;
      std::vector<Frame> stack{{start, s0, 0}};
      mark[key(start, s0)] = Mark::Grey;
      while (!stack.empty()) {
        Frame& f = stack.back();
        const auto& outs = quiver_.out_arrows(quiver_.target(f.arrow));
        if (f.next_child == outs.size()) {
          mark[key(f.arrow, f.state)] = Mark::Black;
          stack.pop_back();
          continue;
        }
        ArrowIndex b = outs[f.next_child++];
        auto s = matcher.step(f.state, b);
        if (matcher.matched(s)) continue;
        Mark& m = mark[key(b, s)];
        if (m == Mark::Grey) return false;
        if (m == Mark::White) {
          m = Mark::Grey;
          stack.push_back({b, s, 0});
        }
      }
    }
    return true;
  }

  std::string name_;
  Quiver quiver_;
  std::vector<Path> zeros_;
  std::vector<CommRelation> comms_;
};

/// Membership of a path in a monomial ideal: true iff some zero generator is
/// a contiguous block of the path. Refuses to answer when a commutativity
/// side occurs inside the path, since membership then depends on the
/// binomial relations (quotient by J first).
inline bool path_in_ideal(const Presentation& p, const Path& path) {
  for (const auto& c : p.comms()) {
    if (contains_subpath(path.arrows, c.left.arrows) ||
        contains_subpath(path.arrows, c.right.arrows)) {
      throw PreconditionError(
          "path meets a commutativity relation; membership requires the "
          "quotient by J");
    }
  }
  return p.contains_zero(path.arrows);
}

/// Convenience builder from ids, used by the parser and by tests.
inline Presentation make_presentation(
    std::string name, std::vector<VertexId> vertices,
    std::vector<ArrowSpec> arrows,
    const std::vector<std::vector<std::string>>& zeros,
    const std::vector<std::pair<std::vector<std::string>,
                                std::vector<std::string>>>& comms = {}) {
  Quiver q(std::move(vertices), std::move(arrows));
  std::vector<Path> zs;
  for (const auto& z : zeros) zs.push_back(make_path(q, z));
  std::vector<CommRelation> cs;
  for (const auto& [l, r] : comms) cs.push_back({make_path(q, l), make_path(q, r)});
  return Presentation(std::move(name), std::move(q), std::move(zs),
                      std::move(cs));
}

}  // namespace laura
