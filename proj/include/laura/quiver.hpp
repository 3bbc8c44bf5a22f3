#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "laura/error.hpp"

namespace laura {

using VertexId = std::string;
using ArrowId = std::string;

// Dense indices. Vertices and arrows are stored sorted by id, so index order
// coincides with the lexicographic order on ids.
using Vertex = std::size_t;
using ArrowIndex = std::size_t;

struct ArrowSpec {
  ArrowId id;
  VertexId source;
  VertexId target;
};

class Quiver {
 public:
  struct Arrow {
    ArrowId id;
    Vertex source;
    Vertex target;
  };

  Quiver() = default;

  Quiver(std::vector<VertexId> vertices, std::vector<ArrowSpec> arrows) {
    std::sort(vertices.begin(), vertices.end());
    if (std::adjacent_find(vertices.begin(), vertices.end()) !=
        vertices.end()) {
      throw SemanticError("duplicate vertex id");
    }
    vertices_ = std::move(vertices);
    for (Vertex v = 0; v < vertices_.size(); ++v) {
      vertex_index_.emplace(vertices_[v], v);
    }
    std::sort(arrows.begin(), arrows.end(),
              [](const ArrowSpec& a, const ArrowSpec& b) { return a.id < b.id; });
    for (const auto& spec : arrows) {
      if (arrow_index_.count(spec.id) != 0) {
        throw SemanticError("duplicate arrow id '" + spec.id + "'");
      }
      auto s = vertex_index(spec.source);
      auto t = vertex_index(spec.target);
      if (!s) {
        throw SemanticError("arrow '" + spec.id + "' has unknown source '" +
                            spec.source + "'");
      }
      if (!t) {
        throw SemanticError("arrow '" + spec.id + "' has unknown target '" +
                            spec.target + "'");
      }
      arrow_index_.emplace(spec.id, arrows_.size());
      arrows_.push_back({spec.id, *s, *t});
    }
    out_.assign(vertices_.size(), {});
    in_.assign(vertices_.size(), {});
    for (ArrowIndex a = 0; a < arrows_.size(); ++a) {
      out_[arrows_[a].source].push_back(a);
      in_[arrows_[a].target].push_back(a);
    }
  }

  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  std::size_t arrow_count() const noexcept { return arrows_.size(); }

  const VertexId& vertex_id(Vertex v) const { return vertices_.at(v); }
  const Arrow& arrow(ArrowIndex a) const { return arrows_.at(a); }
  const ArrowId& arrow_id(ArrowIndex a) const { return arrows_.at(a).id; }
  Vertex source(ArrowIndex a) const { return arrows_.at(a).source; }
  Vertex target(ArrowIndex a) const { return arrows_.at(a).target; }

  const std::vector<VertexId>& vertex_ids() const noexcept { return vertices_; }
  const std::vector<Arrow>& arrows() const noexcept { return arrows_; }

  /// Arrows starting (resp. ending) at v, in index order.
  const std::vector<ArrowIndex>& out_arrows(Vertex v) const { return out_.at(v); }
  const std::vector<ArrowIndex>& in_arrows(Vertex v) const { return in_.at(v); }

  std::optional<Vertex> vertex_index(std::string_view id) const {
    auto it = vertex_index_.find(id);
    if (it == vertex_index_.end()) return std::nullopt;
    return it->second;
  }

  std::optional<ArrowIndex> arrow_index(std::string_view id) const {
    auto it = arrow_index_.find(id);
    if (it == arrow_index_.end()) return std::nullopt;
    return it->second;
  }

  Vertex require_vertex(std::string_view id) const {
    if (auto v = vertex_index(id)) return *v;
    throw SemanticError("unknown vertex '" + std::string(id) + "'");
  }

  ArrowIndex require_arrow(std::string_view id) const {
    if (auto a = arrow_index(id)) return *a;
    throw SemanticError("unknown arrow '" + std::string(id) + "'");
  }

  std::vector<ArrowSpec> arrow_specs() const {
    std::vector<ArrowSpec> out;
    out.reserve(arrows_.size());
    for (const auto& a : arrows_) {
      out.push_back({a.id, vertices_[a.source], vertices_[a.target]});
    }
    return out;
  }

  /// Sub-quiver on the given vertices and arrows. Arrows must have both
  /// endpoints among the kept vertices.
  Quiver restrict(const std::set<Vertex>& vertices,
                  const std::set<ArrowIndex>& arrows) const {
    std::vector<VertexId> vs;
    for (Vertex v : vertices) vs.push_back(vertex_id(v));
    std::vector<ArrowSpec> as;
    for (ArrowIndex a : arrows) {
      if (!vertices.count(source(a)) || !vertices.count(target(a))) {
        throw PreconditionError("restricted arrow '" + arrow_id(a) +
                                "' leaves the vertex set");
      }
      as.push_back({arrow_id(a), vertex_id(source(a)), vertex_id(target(a))});
    }
    return Quiver(std::move(vs), std::move(as));
  }

  friend bool operator==(const Quiver& a, const Quiver& b) {
    if (a.vertices_ != b.vertices_ || a.arrows_.size() != b.arrows_.size()) {
      return false;
    }
    for (std::size_t i = 0; i < a.arrows_.size(); ++i) {
      const auto& x = a.arrows_[i];
      const auto& y = b.arrows_[i];
      if (x.id != y.id || x.source != y.source || x.target != y.target) {
        return false;
      }
    }
    return true;
  }

 private:
  std::vector<VertexId> vertices_;
  std::vector<Arrow> arrows_;
  std::map<std::string, Vertex, std::less<>> vertex_index_;
  std::map<std::string, ArrowIndex, std::less<>> arrow_index_;
  std::vector<std::vector<ArrowIndex>> out_;
  std::vector<std::vector<ArrowIndex>> in_;
};

/// A nonempty oriented path, composed left to right: in {a, b}, a is
/// traversed first and target(a) == source(b).
struct Path {
  std::vector<ArrowIndex> arrows;

  std::size_t length() const noexcept { return arrows.size(); }
  bool empty() const noexcept { return arrows.empty(); }

  friend auto operator<=>(const Path&, const Path&) = default;
};

inline bool is_composable(const Quiver& q, const Path& p) {
  if (p.arrows.empty()) return false;
  for (std::size_t i = 0; i + 1 < p.arrows.size(); ++i) {
    if (q.target(p.arrows[i]) != q.source(p.arrows[i + 1])) return false;
  }
  return true;
}

inline Vertex path_source(const Quiver& q, const Path& p) {
  return q.source(p.arrows.front());
}

inline Vertex path_target(const Quiver& q, const Path& p) {
  return q.target(p.arrows.back());
}

/// True if `needle` occurs as a contiguous block of `haystack`.
inline bool contains_subpath(const std::vector<ArrowIndex>& haystack,
                             const std::vector<ArrowIndex>& needle) {
  if (needle.empty() || needle.size() > haystack.size()) return needle.empty();
  return std::search(haystack.begin(), haystack.end(), needle.begin(),
                     needle.end()) != haystack.end();
}

inline Path make_path(const Quiver& q, const std::vector<std::string>& ids) {
  Path p;
  for (const auto& id : ids) p.arrows.push_back(q.require_arrow(id));
  if (p.arrows.empty()) throw SemanticError("empty path");
  if (!is_composable(q, p)) {
    std::string text;
    for (const auto& id : ids) text += (text.empty() ? "" : " ") + id;
    throw SemanticError("path '" + text + "' is not composable");
  }
  return p;
}

inline std::vector<std::string> path_ids(const Quiver& q, const Path& p) {
  std::vector<std::string> out;
  for (ArrowIndex a : p.arrows) out.push_back(q.arrow_id(a));
  return out;
}

}  // namespace laura
