#pragma once

#include <cctype>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "laura/error.hpp"
#include "laura/presentation.hpp"
#include "laura/quiver.hpp"

namespace laura {

// Algebra files, one declaration per line, '#' starts a comment:
//
//   algebra <name>
//   vertex <id> [<id> ...]
//   arrow <id> : <src> -> <tgt>
//   zero <arrow> <arrow> [...]
//   comm <arrow>... = <arrow>...

namespace detail {

struct Token {
  std::string text;
  std::size_t column;  // 1-based
};

inline bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == '\'';
}

inline std::vector<Token> tokenize(std::string_view line, std::size_t line_no) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    char c = line[i];
    if (c == '#') break;
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (c == ':' || c == '=') {
      out.push_back({std::string(1, c), i + 1});
      ++i;
    } else if (c == '-' && i + 1 < line.size() && line[i + 1] == '>') {
      out.push_back({"->", i + 1});
      i += 2;
    } else if (ident_char(c)) {
      std::size_t j = i;
      while (j < line.size() && ident_char(line[j])) ++j;
      out.push_back({std::string(line.substr(i, j - i)), i + 1});
      i = j;
    } else {
      throw ParseError(line_no, i + 1, std::string("unexpected character '") + c + "'");
    }
  }
  return out;
}

inline bool is_ident(const Token& t) { return ident_char(t.text.front()); }

}  // namespace detail

inline Presentation parse_algebra(std::string_view text) {
  std::string name;
  std::vector<VertexId> vertices;
  std::set<VertexId> declared;
  std::vector<ArrowSpec> arrows;
  std::set<ArrowId> arrow_ids;
  struct PathRef {
    std::vector<detail::Token> ids;
    std::size_t line;
  };
  std::vector<PathRef> zeros;
  std::vector<std::pair<PathRef, PathRef>> comms;

  std::size_t line_no = 0;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    auto toks = detail::tokenize(line, line_no);
    if (toks.empty()) continue;
    const auto& kw = toks[0];
    auto expect_ident = [&](std::size_t i, const char* what) -> const detail::Token& {
      if (i >= toks.size()) {
        throw ParseError(line_no, line.size() + 1, std::string("expected ") + what);
      }
      if (!detail::is_ident(toks[i])) {
        throw ParseError(line_no, toks[i].column,
                         std::string("expected ") + what + ", got '" + toks[i].text + "'");
      }
      return toks[i];
    };
    auto expect_symbol = [&](std::size_t i, const char* sym) {
      if (i >= toks.size() || toks[i].text != sym) {
        std::size_t col = i < toks.size() ? toks[i].column : line.size() + 1;
        throw ParseError(line_no, col, std::string("expected '") + sym + "'");
      }
    };
    if (kw.text == "algebra") {
      if (!name.empty()) throw ParseError(line_no, kw.column, "second 'algebra' line");
      name = expect_ident(1, "algebra name").text;
      if (toks.size() > 2) throw ParseError(line_no, toks[2].column, "trailing tokens");
    } else if (kw.text == "vertex") {
      expect_ident(1, "vertex id");
      for (std::size_t i = 1; i < toks.size(); ++i) {
        const auto& t = expect_ident(i, "vertex id");
        if (!declared.insert(t.text).second) {
          throw ParseError(line_no, t.column, "vertex '" + t.text + "' declared twice");
        }
        vertices.push_back(t.text);
      }
    } else if (kw.text == "arrow") {
      const auto& id = expect_ident(1, "arrow id");
      expect_symbol(2, ":");
      const auto& src = expect_ident(3, "source vertex");
      expect_symbol(4, "->");
      const auto& tgt = expect_ident(5, "target vertex");
      if (toks.size() > 6) throw ParseError(line_no, toks[6].column, "trailing tokens");
      for (const auto* t : {&src, &tgt}) {
        if (!declared.count(t->text)) {
          throw ParseError(line_no, t->column, "unknown vertex '" + t->text + "'");
        }
      }
      if (!arrow_ids.insert(id.text).second) {
        throw ParseError(line_no, id.column, "arrow '" + id.text + "' declared twice");
      }
      arrows.push_back({id.text, src.text, tgt.text});
    } else if (kw.text == "zero") {
      PathRef ref{{}, line_no};
      for (std::size_t i = 1; i < toks.size(); ++i) ref.ids.push_back(expect_ident(i, "arrow id"));
      if (ref.ids.size() < 2) {
        throw ParseError(line_no, kw.column, "zero relation needs at least two arrows");
      }
      zeros.push_back(std::move(ref));
    } else if (kw.text == "comm") {
      PathRef left{{}, line_no}, right{{}, line_no};
      std::size_t i = 1;
      for (; i < toks.size() && toks[i].text != "="; ++i) {
        left.ids.push_back(expect_ident(i, "arrow id"));
      }
      expect_symbol(i, "=");
      for (++i; i < toks.size(); ++i) right.ids.push_back(expect_ident(i, "arrow id"));
      if (left.ids.empty() || right.ids.empty()) {
        throw ParseError(line_no, kw.column, "comm needs a path on both sides");
      }
      comms.emplace_back(std::move(left), std::move(right));
    } else {
      throw ParseError(line_no, kw.column, "unknown declaration '" + kw.text + "'");
    }
  }
  if (name.empty()) throw ParseError(line_no + 1, 1, "missing 'algebra <name>' line");

  Quiver q(vertices, arrows);
  auto resolve = [&](const PathRef& ref) {
    Path p;
    for (const auto& t : ref.ids) {
      auto a = q.arrow_index(t.text);
      if (!a) {
        throw SemanticError("line " + std::to_string(ref.line) + ", column " +
                            std::to_string(t.column) + ": unknown arrow '" + t.text + "'");
      }
      p.arrows.push_back(*a);
    }
    if (!is_composable(q, p)) {
      throw SemanticError("line " + std::to_string(ref.line) +
                          ": path is not composable (composition is left to right)");
    }
    return p;
  };
  std::vector<Path> zs;
  for (const auto& z : zeros) zs.push_back(resolve(z));
  std::vector<CommRelation> cs;
  for (const auto& [l, r] : comms) cs.push_back({resolve(l), resolve(r)});
  return Presentation(name, std::move(q), std::move(zs), std::move(cs));
}

inline Presentation load_algebra(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SemanticError("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_algebra(buf.str());
}

/// Canonical text: vertices and arrows in id order, minimal zero relations
/// in path order, one declaration per line.
inline std::string serialize(const Presentation& p) {
  const Quiver& q = p.quiver();
  std::ostringstream out;
  out << "algebra " << p.name() << "\n";
  out << "vertex";
  for (const auto& v : q.vertex_ids()) out << ' ' << v;
  out << "\n";
  for (const auto& a : q.arrows()) {
    out << "arrow " << a.id << " : " << q.vertex_id(a.source) << " -> "
        << q.vertex_id(a.target) << "\n";
  }
  auto ids = [&](const Path& path) {
    std::string s;
    for (ArrowIndex a : path.arrows) s += " " + q.arrow_id(a);
    return s;
  };
  for (const auto& z : p.zeros()) out << "zero" << ids(z) << "\n";
  for (const auto& c : p.comms()) out << "comm" << ids(c.left) << " =" << ids(c.right) << "\n";
  return out.str();
}

}  // namespace laura
