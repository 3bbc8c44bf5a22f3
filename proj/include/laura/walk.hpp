#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "laura/error.hpp"
#include "laura/quiver.hpp"

namespace laura {

enum class Direction : std::uint8_t { Direct = 0, Inverse = 1 };

/// An arrow traversed forwards or backwards. Ordered by (arrow id, direction)
/// with Direct before Inverse.
struct Letter {
  ArrowIndex arrow = 0;
  Direction dir = Direction::Direct;

  static Letter direct(ArrowIndex a) { return {a, Direction::Direct}; }
  static Letter inverse_of(ArrowIndex a) { return {a, Direction::Inverse}; }

  bool is_direct() const noexcept { return dir == Direction::Direct; }
  Letter inverse() const noexcept {
    return {arrow, is_direct() ? Direction::Inverse : Direction::Direct};
  }
  /// Dense code 2 * arrow + direction, the alphabet of the string automaton.
  std::size_t code() const noexcept {
    return 2 * arrow + static_cast<std::size_t>(dir);
  }
  static Letter from_code(std::size_t c) {
    return {c / 2, static_cast<Direction>(c % 2)};
  }

  friend auto operator<=>(const Letter&, const Letter&) = default;
};

inline Vertex letter_source(const Quiver& q, Letter l) {
  return l.is_direct() ? q.source(l.arrow) : q.target(l.arrow);
}

inline Vertex letter_target(const Quiver& q, Letter l) {
  return l.is_direct() ? q.target(l.arrow) : q.source(l.arrow);
}

using Word = std::vector<Letter>;

/// A walk: a base vertex and a (possibly empty) sequence of composable
/// letters. The empty walk at x is the trivial walk e_x.
struct Walk {
  Vertex base = 0;
  Word letters;

  std::size_t length() const noexcept { return letters.size(); }
  bool trivial() const noexcept { return letters.empty(); }

  friend bool operator==(const Walk&, const Walk&) = default;
};

/// Canonical total order on walks: length, then letters, then base.
struct WalkLess {
  bool operator()(const Walk& a, const Walk& b) const {
    if (a.length() != b.length()) return a.length() < b.length();
    if (a.letters != b.letters) return a.letters < b.letters;
    return a.base < b.base;
  }
};

inline Walk path_walk(const Quiver& q, const Path& p) {
  Walk w{path_source(q, p), {}};
  for (ArrowIndex a : p.arrows) w.letters.push_back(Letter::direct(a));
  return w;
}

inline bool is_walk(const Quiver& q, const Walk& w) {
  if (w.base >= q.vertex_count()) return false;
  Vertex at = w.base;
  for (Letter l : w.letters) {
    if (l.arrow >= q.arrow_count() || letter_source(q, l) != at) return false;
    at = letter_target(q, l);
  }
  return true;
}

inline Vertex end_vertex(const Quiver& q, const Walk& w) {
  return w.trivial() ? w.base : letter_target(q, w.letters.back());
}

/// The length() + 1 vertex passages of the walk, in order.
inline std::vector<Vertex> passages(const Quiver& q, const Walk& w) {
  std::vector<Vertex> out{w.base};
  for (Letter l : w.letters) out.push_back(letter_target(q, l));
  return out;
}

inline Word inverse_word(const Word& word) {
  Word out;
  out.reserve(word.size());
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    out.push_back(it->inverse());
  }
  return out;
}

inline Walk inverse(const Quiver& q, const Walk& w) {
  return {end_vertex(q, w), inverse_word(w.letters)};
}

inline Walk concat(const Quiver& q, const Walk& a, const Walk& b) {
  if (end_vertex(q, a) != b.base) {
    throw PreconditionError("walks are not composable");
  }
  Walk out = a;
  out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
  return out;
}

/// Subwalk of `count` letters starting at letter position `pos`.
inline Walk subwalk(const Quiver& q, const Walk& w, std::size_t pos,
                    std::size_t count) {
  Vertex base = pos == 0 ? w.base : letter_target(q, w.letters[pos - 1]);
  return {base, Word(w.letters.begin() + static_cast<std::ptrdiff_t>(pos),
                     w.letters.begin() + static_cast<std::ptrdiff_t>(pos + count))};
}

/// Representative of {w, w^-1}: the one with the smaller letter sequence.
inline Walk canonical_string(const Quiver& q, const Walk& w) {
  if (w.trivial()) return w;
  Walk inv = inverse(q, w);
  return inv.letters < w.letters ? inv : w;
}

inline bool is_primitive(const Word& word) {
  const std::size_t n = word.size();
  for (std::size_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    bool periodic = true;
    for (std::size_t i = d; i < n && periodic; ++i) {
      periodic = word[i] == word[i - d];
    }
    if (periodic) return false;
  }
  return n > 0;
}

inline Word primitive_root(const Word& word) {
  const std::size_t n = word.size();
  for (std::size_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    bool periodic = true;
    for (std::size_t i = d; i < n && periodic; ++i) {
      periodic = word[i] == word[i - d];
    }
    if (periodic) return Word(word.begin(), word.begin() + static_cast<std::ptrdiff_t>(d));
  }
  return word;
}

/// A closed walk considered up to rotation.
struct CyclicWalk {
  Walk walk;

  std::size_t length() const noexcept { return walk.length(); }

  friend bool operator==(const CyclicWalk&, const CyclicWalk&) = default;
};

inline bool is_closed(const Quiver& q, const Walk& w) {
  return !w.trivial() && end_vertex(q, w) == w.base;
}

inline CyclicWalk make_cyclic(const Quiver& q, Walk w) {
  if (!is_walk(q, w) || !is_closed(q, w)) {
    throw PreconditionError("cyclic walk must be a nontrivial closed walk");
  }
  return {std::move(w)};
}

/// Rotation starting at letter position k.
inline CyclicWalk rotate(const Quiver& q, const CyclicWalk& c, std::size_t k) {
  const auto& letters = c.walk.letters;
  k %= letters.size();
  Word out(letters.begin() + static_cast<std::ptrdiff_t>(k), letters.end());
  out.insert(out.end(), letters.begin(),
             letters.begin() + static_cast<std::ptrdiff_t>(k));
  return {{letter_source(q, out.front()), std::move(out)}};
}

inline CyclicWalk inverse(const Quiver& q, const CyclicWalk& c) {
  return {inverse(q, c.walk)};
}

/// Lexicographically least letter sequence over all rotations of c and c^-1.
inline CyclicWalk canonical_band(const Quiver& q, const CyclicWalk& c) {
  CyclicWalk best = c;
  for (const CyclicWalk& orientation : {c, inverse(q, c)}) {
    for (std::size_t k = 0; k < c.length(); ++k) {
      CyclicWalk r = rotate(q, orientation, k);
      if (r.walk.letters < best.walk.letters) best = std::move(r);
    }
  }
  return best;
}

/// c^n as a walk (n = 0 gives the trivial walk at the base).
inline Walk power(const CyclicWalk& c, std::size_t n) {
  Walk out{c.walk.base, {}};
  for (std::size_t i = 0; i < n; ++i) {
    out.letters.insert(out.letters.end(), c.walk.letters.begin(),
                       c.walk.letters.end());
  }
  return out;
}

// ---------------------------------------------------------------------------
// Text form: "base: l1 l2 ..." with letters "a" (direct) and "a^-1"
// (inverse); bands are prefixed with "band: ".

inline std::string render_letter(const Quiver& q, Letter l) {
  return l.is_direct() ? q.arrow_id(l.arrow) : q.arrow_id(l.arrow) + "^-1";
}

inline std::string render_walk(const Quiver& q, const Walk& w) {
  std::string out = q.vertex_id(w.base) + ":";
  for (Letter l : w.letters) out += " " + render_letter(q, l);
  return out;
}

inline std::string render_band(const Quiver& q, const CyclicWalk& c) {
  return "band: " + render_walk(q, c.walk);
}

inline Letter parse_letter(const Quiver& q, std::string_view token) {
  constexpr std::string_view inv = "^-1";
  if (token.size() > inv.size() && token.substr(token.size() - inv.size()) == inv) {
    return Letter::inverse_of(q.require_arrow(token.substr(0, token.size() - inv.size())));
  }
  return Letter::direct(q.require_arrow(token));
}

inline Walk parse_walk(const Quiver& q, std::string_view text) {
  auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw SemanticError("walk '" + std::string(text) + "' lacks 'base:'");
  }
  std::string base(text.substr(0, colon));
  base.erase(0, base.find_first_not_of(" \t"));
  base.erase(base.find_last_not_of(" \t") + 1);
  Walk w{q.require_vertex(base), {}};
  std::istringstream rest{std::string(text.substr(colon + 1))};
  std::string token;
  while (rest >> token) w.letters.push_back(parse_letter(q, token));
  if (!is_walk(q, w)) {
    throw SemanticError("'" + std::string(text) + "' is not a walk");
  }
  return w;
}

inline CyclicWalk parse_band(const Quiver& q, std::string_view text) {
  constexpr std::string_view prefix = "band:";
  if (text.substr(0, prefix.size()) != prefix) {
    throw SemanticError("band text must start with 'band:'");
  }
  Walk w = parse_walk(q, text.substr(prefix.size()));
  if (!is_closed(q, w)) throw SemanticError("band walk is not closed");
  return {std::move(w)};
}

}  // namespace laura
