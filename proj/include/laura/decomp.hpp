#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "laura/aho_corasick.hpp"
#include "laura/automaton.hpp"
#include "laura/classify.hpp"
#include "laura/doze.hpp"
#include "laura/error.hpp"
#include "laura/strings.hpp"

namespace laura {

enum class Side { A, B, C };

struct Subcategory {
  Side side = Side::C;
  std::size_t index = 0;  // i of A_i / j of B_j, 1-based; 0 for C
  std::set<Vertex> objects;
  std::set<ArrowIndex> arrows;
  std::optional<CyclicWalk> band;  // Theta_i / Delta_j
  std::optional<Vertex> anchor;

  bool contains(const Walk& w, const Quiver& q) const {
    for (Vertex v : passages(q, w)) {
      if (!objects.count(v)) return false;
    }
    for (Letter l : w.letters) {
      if (!arrows.count(l.arrow)) return false;
    }
    return true;
  }
};

inline std::string label(const Subcategory& s) {
  switch (s.side) {
    case Side::A: return "A" + std::to_string(s.index);
    case Side::B: return "B" + std::to_string(s.index);
    case Side::C: return "C";
  }
  return "?";
}

struct Decomposition {
  std::vector<Subcategory> a_parts;
  std::vector<Subcategory> b_parts;
  Subcategory middle;
  bool anchors_agree = true;  // D(e_a) independent of the eligible anchor
  std::vector<std::string> notes;

  std::vector<const Subcategory*> sides() const {
    std::vector<const Subcategory*> out;
    for (const auto& s : a_parts) out.push_back(&s);
    for (const auto& s : b_parts) out.push_back(&s);
    return out;
  }
};

/// D(w): vertices and arrows met by strings that contain w as a factor.
///
/// Explores the product of the string automaton with an occurrence tracker
/// for w (a single-pattern matcher, or "visited x" when w = e_x). A product
/// state is useful when it can reach a state where w has occurred; D(w) is
/// read off the useful states.
inline Subcategory d_category(const Presentation& p, const Walk& w) {
  if (!is_string(p, w)) {
    throw PreconditionError("d_category needs a string, got '" +
                            render_walk(p.quiver(), w) + "'");
  }
  const Quiver& q = p.quiver();
  StringAutomaton aut(p);
  std::vector<std::size_t> pattern;
  for (Letter l : w.letters) pattern.push_back(l.code());
  MultiPatternMatcher occurrence(2 * q.arrow_count(),
                                 w.trivial() ? std::vector<std::vector<std::size_t>>{}
                                             : std::vector<std::vector<std::size_t>>{pattern});
  using Key = std::tuple<StringAutomaton::StateId, MultiPatternMatcher::State, bool>;
  std::map<Key, std::size_t> index;
  std::vector<Key> keys;
  std::vector<std::vector<std::size_t>> preds;
  std::queue<std::size_t> queue;
  auto intern = [&](const Key& k) {
    auto [it, fresh] = index.emplace(k, keys.size());
    if (fresh) {
      keys.push_back(k);
      preds.emplace_back();
      queue.push(it->second);
    }
    return it->second;
  };
  for (Vertex v = 0; v < q.vertex_count(); ++v) {
    bool found = w.trivial() && v == w.base;
    intern({aut.initial(v), MultiPatternMatcher::root, found});
  }
  while (!queue.empty()) {
    std::size_t id = queue.front();
    queue.pop();
    auto [s, m, found] = keys[id];
    for (const auto& [l, t] : aut.successors(s)) {
      Key next;
      if (found) {
        next = {t, MultiPatternMatcher::root, true};
      } else if (w.trivial()) {
        next = {t, MultiPatternMatcher::root, aut.state(t).at == w.base};
      } else {
        auto m2 = occurrence.step(m, l.code());
        bool hit = occurrence.matched(m2);
        next = {t, hit ? MultiPatternMatcher::root : m2, hit};
      }
      std::size_t to = intern(next);
      preds[to].push_back(id);
    }
  }
  std::vector<bool> useful(keys.size(), false);
  std::queue<std::size_t> back;
  for (std::size_t i = 0; i < keys.size(); ++i) {
    if (std::get<2>(keys[i])) {
      useful[i] = true;
      back.push(i);
    }
  }
  while (!back.empty()) {
    std::size_t i = back.front();
    back.pop();
    for (std::size_t j : preds[i]) {
      if (!useful[j]) {
        useful[j] = true;
        back.push(j);
      }
    }
  }
  Subcategory out;
  for (std::size_t i = 0; i < keys.size(); ++i) {
    if (!useful[i]) continue;
    const auto& st = aut.state(std::get<0>(keys[i]));
    out.objects.insert(st.at);
    if (st.last) {
      out.arrows.insert(st.last->arrow);
      out.objects.insert(letter_source(q, *st.last));
    }
  }
  return out;
}

/// Vertices v on the band such that every arrow starting (side A) or ending
/// (side B) at v lies on the band, in id order.
inline std::vector<Vertex> eligible_anchors(const Presentation& p,
                                            const CyclicWalk& band, Side side) {
  const Quiver& q = p.quiver();
  auto on_band = arrows_of(band.walk);
  std::vector<Vertex> out;
  for (Vertex v : vertices_of(q, band.walk)) {
    const auto& arrows = side == Side::A ? q.out_arrows(v) : q.in_arrows(v);
    if (std::all_of(arrows.begin(), arrows.end(),
                    [&](ArrowIndex a) { return on_band.count(a) > 0; })) {
      out.push_back(v);
    }
  }
  return out;
}

inline Vertex choose_anchor(const Presentation& p, const CyclicWalk& band,
                            Side side = Side::A) {
  auto anchors = eligible_anchors(p, band, side);
  if (anchors.empty()) {
    throw AnomalyError("band " + render_band(p.quiver(), band) +
                       " has no anchor vertex; corrupted presentation");
  }
  return anchors.front();
}

namespace detail {

// Vertices and arrows met by strings whose support lies in no single part.
// Product of the automaton with the mask of parts still containing the walk.
inline Subcategory middle_part(const Presentation& p,
                               const std::vector<const Subcategory*>& parts) {
  const Quiver& q = p.quiver();
  if (parts.size() > 64) throw PreconditionError("more than 64 side parts");
  std::vector<std::uint64_t> vmask(q.vertex_count(), 0), amask(q.arrow_count(), 0);
  for (std::size_t k = 0; k < parts.size(); ++k) {
    for (Vertex v : parts[k]->objects) vmask[v] |= std::uint64_t{1} << k;
    for (ArrowIndex a : parts[k]->arrows) amask[a] |= std::uint64_t{1} << k;
  }
  StringAutomaton aut(p);
  using Key = std::pair<StringAutomaton::StateId, std::uint64_t>;
  std::map<Key, std::size_t> index;
  std::vector<Key> keys;
  std::vector<std::vector<std::size_t>> preds;
  std::queue<std::size_t> queue;
  auto intern = [&](const Key& k) {
    auto [it, fresh] = index.emplace(k, keys.size());
    if (fresh) {
      keys.push_back(k);
      preds.emplace_back();
      queue.push(it->second);
    }
    return it->second;
  };
  for (Vertex v = 0; v < q.vertex_count(); ++v) intern({aut.initial(v), vmask[v]});
  while (!queue.empty()) {
    std::size_t id = queue.front();
    queue.pop();
    auto [s, mask] = keys[id];
    for (const auto& [l, t] : aut.successors(s)) {
      std::uint64_t m = mask & amask[l.arrow] & vmask[aut.state(t).at];
      preds[intern({t, m})].push_back(id);
    }
  }
  std::vector<bool> good(keys.size(), false);
  std::queue<std::size_t> back;
  for (std::size_t i = 0; i < keys.size(); ++i) {
    if (keys[i].second == 0) {
      good[i] = true;
      back.push(i);
    }
  }
  while (!back.empty()) {
    std::size_t i = back.front();
    back.pop();
    for (std::size_t j : preds[i]) {
      if (!good[j]) {
        good[j] = true;
        back.push(j);
      }
    }
  }
  Subcategory c;
  c.side = Side::C;
  for (std::size_t i = 0; i < keys.size(); ++i) {
    if (!good[i]) continue;
    const auto& st = aut.state(keys[i].first);
    c.objects.insert(st.at);
    if (st.last) {
      c.arrows.insert(st.last->arrow);
      c.objects.insert(letter_source(q, *st.last));
    }
  }
  return c;
}

}  // namespace detail

/// Side algebras A_i (one per band with only exiting arrows), B_j (only
/// entering arrows) and the middle part C, for string algebras without DOZE
/// whose bands are all one-sided.
inline Decomposition decompose(const Presentation& input) {
  ClassificationReport report = classify(input);
  if (report.verdict != Verdict::StrictLauraOrTilted) {
    throw PreconditionError("decomposition needs a DOZE-free algebra whose "
                            "bands are one-sided; verdict is " +
                            std::string(to_string(report.verdict)));
  }
  const Presentation& p = report.analyzed;
  Decomposition d;
  if (report.quotient_by_j) d.notes.push_back("computed on the quotient by J");
  for (const auto& entry : report.bands) {
    Side side = entry.boundary.entering.empty() ? Side::A : Side::B;
    auto anchors = eligible_anchors(p, entry.band, side);
    if (anchors.empty()) {
      throw AnomalyError("band " + render_band(p.quiver(), entry.band) +
                         " has no anchor vertex");
    }
    Subcategory part = d_category(p, Walk{anchors.front(), {}});
    for (std::size_t k = 1; k < anchors.size(); ++k) {
      Subcategory other = d_category(p, Walk{anchors[k], {}});
      if (other.objects != part.objects || other.arrows != part.arrows) {
        d.anchors_agree = false;
        d.notes.push_back("D(e_a) depends on the anchor for band " +
                          render_band(p.quiver(), entry.band));
      }
    }
    part.side = side;
    part.band = entry.band;
    part.anchor = anchors.front();
    auto& bucket = side == Side::A ? d.a_parts : d.b_parts;
    part.index = bucket.size() + 1;
    bucket.push_back(std::move(part));
  }
  auto by_objects = [](std::vector<Subcategory>& parts) {
    std::sort(parts.begin(), parts.end(),
              [](const Subcategory& a, const Subcategory& b) {
                return std::tie(a.objects, a.arrows) < std::tie(b.objects, b.arrows);
              });
    for (std::size_t i = 0; i < parts.size(); ++i) parts[i].index = i + 1;
  };
  by_objects(d.a_parts);
  by_objects(d.b_parts);
  d.middle = detail::middle_part(p, d.sides());
  d.notes.push_back("C collects the strings whose support is not contained in "
                    "a single A_i or B_j");
  return d;
}

struct StructureReport {
  bool full = true;
  bool no_entry = true;
  bool convex = true;
  bool unique_cycle = true;
  bool c_finite = true;
  bool no_double_zero = true;
  std::vector<std::string> failures;

  bool all() const {
    return full && no_entry && convex && unique_cycle && c_finite && no_double_zero;
  }
};

namespace detail {

inline bool connected_single_cycle(const Quiver& q, const Subcategory& s) {
  if (s.objects.empty()) return false;
  std::map<Vertex, std::vector<Vertex>> adj;
  for (ArrowIndex a : s.arrows) {
    adj[q.source(a)].push_back(q.target(a));
    adj[q.target(a)].push_back(q.source(a));
  }
  std::set<Vertex> seen{*s.objects.begin()};
  std::vector<Vertex> stack{*s.objects.begin()};
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex u : adj[v]) {
      if (seen.insert(u).second) stack.push_back(u);
    }
  }
  // Connected multigraph with cyclomatic number 1.
  return seen.size() == s.objects.size() && s.arrows.size() == s.objects.size();
}

inline bool has_oriented_cycle(const Quiver& q, const Subcategory& s) {
  std::map<Vertex, int> indegree;
  for (Vertex v : s.objects) indegree[v] = 0;
  for (ArrowIndex a : s.arrows) ++indegree[q.target(a)];
  std::vector<Vertex> ready;
  for (auto [v, d] : indegree) {
    if (d == 0) ready.push_back(v);
  }
  std::size_t removed = 0;
  while (!ready.empty()) {
    Vertex v = ready.back();
    ready.pop_back();
    ++removed;
    for (ArrowIndex a : q.out_arrows(v)) {
      if (s.arrows.count(a) && --indegree[q.target(a)] == 0) {
        ready.push_back(q.target(a));
      }
    }
  }
  return removed != s.objects.size();
}

}  // namespace detail

/// Mechanical structure checks on a decomposition. `p` is the
/// presentation the decomposition refers to (R, or R/J).
inline StructureReport check_structure(const Presentation& p,
                                       const Decomposition& d) {
  const Quiver& q = p.quiver();
  StructureReport r;
  auto fail = [&](bool& flag, const std::string& what) {
    flag = false;
    r.failures.push_back(what);
  };
  for (const Subcategory* part : d.sides()) {
    const std::string name = label(*part);
    const bool a_side = part->side == Side::A;
    for (ArrowIndex a = 0; a < q.arrow_count(); ++a) {
      bool src_in = part->objects.count(q.source(a)) > 0;
      bool tgt_in = part->objects.count(q.target(a)) > 0;
      if (src_in && tgt_in && !part->arrows.count(a)) {
        fail(r.full, name + " is not full: arrow " + q.arrow_id(a));
      }
      if (a_side && !src_in && tgt_in) {
        fail(r.no_entry, "arrow " + q.arrow_id(a) + " enters " + name);
      }
      if (!a_side && src_in && !tgt_in) {
        fail(r.no_entry, "arrow " + q.arrow_id(a) + " leaves " + name);
      }
    }
    // Convexity: no oriented path leaves the part and comes back.
    std::set<Vertex> outside;
    std::vector<Vertex> stack;
    for (Vertex v : part->objects) {
      for (ArrowIndex a : q.out_arrows(v)) {
        Vertex t = q.target(a);
        if (!part->objects.count(t) && outside.insert(t).second) stack.push_back(t);
      }
    }
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (ArrowIndex a : q.out_arrows(v)) {
        Vertex t = q.target(a);
        if (part->objects.count(t)) {
          fail(r.convex, name + " is not convex: re-entered via " + q.arrow_id(a));
        } else if (outside.insert(t).second) {
          stack.push_back(t);
        }
      }
    }
    if (!detail::connected_single_cycle(q, *part)) {
      fail(r.unique_cycle, name + " does not have exactly one simple cycle");
    }
    if (detail::has_oriented_cycle(q, *part)) {
      fail(r.unique_cycle, name + " has an oriented cycle");
    }
    Presentation sub = p.restrict(part->objects, part->arrows, name);
    if (!find_double_zeros(sub, pumping_bound(sub) + 2 * sub.max_zero_length()).empty()) {
      fail(r.no_double_zero, name + " contains a double-zero");
    }
  }
  if (!d.middle.objects.empty()) {
    Presentation c = p.restrict(d.middle.objects, d.middle.arrows, "C");
    if (exists_band(c)) fail(r.c_finite, "C contains a band");
  }
  return r;
}

inline StructureReport check_structure(const Presentation& p) {
  bool quotiented = false;
  Presentation r = string_presentation(p, &quotiented);
  return check_structure(r, decompose(p));
}

/// Every string of length <= max_len has its support inside some A_i, some
/// B_j, or C.
inline bool support_cover_check(const Presentation& p, const Decomposition& d,
                                std::size_t max_len) {
  const Quiver& q = p.quiver();
  auto parts = d.sides();
  parts.push_back(&d.middle);
  for (const Walk& w : enumerate_strings(p, max_len)) {
    bool covered = std::any_of(parts.begin(), parts.end(), [&](const Subcategory* s) {
      return s->contains(w, q);
    });
    if (!covered) return false;
  }
  return true;
}

}  // namespace laura
