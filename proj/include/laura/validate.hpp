#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "laura/error.hpp"
#include "laura/presentation.hpp"

namespace laura {

struct Violation {
  int condition;      // 1: valency, 2: unique continuation, 3: monomial
  std::string site;   // vertex id, arrow id, or the offending relation
  std::string detail;

  friend bool operator==(const Violation&, const Violation&) = default;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const noexcept { return violations.empty(); }

  bool has(int condition, const std::string& site) const {
    return std::any_of(violations.begin(), violations.end(),
                       [&](const Violation& v) {
                         return v.condition == condition && v.site == site;
                       });
  }
};

namespace detail {

inline std::string render_path(const Quiver& q, const Path& p) {
  std::string out;
  for (ArrowIndex a : p.arrows) {
    if (!out.empty()) out += ' ';
    out += q.arrow_id(a);
  }
  return out;
}

// Conditions (1) and (2). A two-arrow path vanishes iff it is itself a zero
// generator; commutativity sides never make a 2-path vanish.
inline void check_biserial_conditions(const Presentation& p,
                                      ValidationReport& report) {
  const Quiver& q = p.quiver();
  for (Vertex v = 0; v < q.vertex_count(); ++v) {
    if (q.in_arrows(v).size() > 2) {
      report.violations.push_back(
          {1, q.vertex_id(v),
           std::to_string(q.in_arrows(v).size()) + " arrows entering"});
    }
    if (q.out_arrows(v).size() > 2) {
      report.violations.push_back(
          {1, q.vertex_id(v),
           std::to_string(q.out_arrows(v).size()) + " arrows exiting"});
    }
  }
  for (ArrowIndex a = 0; a < q.arrow_count(); ++a) {
    std::vector<std::string> after;
    for (ArrowIndex b : q.out_arrows(q.target(a))) {
      if (!p.contains_zero({a, b})) {
        after.push_back(q.arrow_id(a) + " " + q.arrow_id(b));
      }
    }
    if (after.size() > 1) {
      std::string d;
      for (const auto& s : after) d += (d.empty() ? "" : ", ") + s;
      report.violations.push_back({2, q.arrow_id(a), d + " avoid I"});
    }
    std::vector<std::string> before;
    for (ArrowIndex c : q.in_arrows(q.source(a))) {
      if (!p.contains_zero({c, a})) {
        before.push_back(q.arrow_id(c) + " " + q.arrow_id(a));
      }
    }
    if (before.size() > 1) {
      std::string d;
      for (const auto& s : before) d += (d.empty() ? "" : ", ") + s;
      report.violations.push_back({2, q.arrow_id(a), d + " avoid I"});
    }
  }
}

}  // namespace detail

/// Checks the three string-algebra conditions on the given presentation.
/// Violations are reported, never thrown.
inline ValidationReport validate_string_algebra(const Presentation& p) {
  ValidationReport report;
  detail::check_biserial_conditions(p, report);
  for (const auto& c : p.comms()) {
    report.violations.push_back(
        {3,
         detail::render_path(p.quiver(), c.left) + " = " +
             detail::render_path(p.quiver(), c.right),
         "commutativity relation: ideal is not monomial"});
  }
  return report;
}

inline ValidationReport validate_special_biserial(const Presentation& p) {
  ValidationReport report;
  detail::check_biserial_conditions(p, report);
  return report;
}

/// R/J: both sides of every commutativity relation become zero relations.
inline Presentation quotient_by_J(const Presentation& p) {
  auto report = validate_special_biserial(p);
  if (!report.ok()) {
    throw PreconditionError("quotient by J needs a special biserial "
                            "presentation; first violation at '" +
                            report.violations.front().site + "'");
  }
  if (p.is_monomial()) return p;
  std::vector<Path> zeros = p.zeros();
  for (const auto& c : p.comms()) {
    zeros.push_back(c.left);
    zeros.push_back(c.right);
  }
  return Presentation(p.name(), p.quiver(), std::move(zeros));
}

}  // namespace laura
