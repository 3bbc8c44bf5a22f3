#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "laura/doze.hpp"
#include "laura/error.hpp"
#include "laura/presentation.hpp"
#include "laura/strings.hpp"
#include "laura/validate.hpp"

namespace laura {

enum class Verdict {
  FiniteType,
  QuasiTiltedCanonical,
  StrictLauraOrTilted,
  HereditarySingleBand,
  NotLaura,
};

inline std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::FiniteType: return "FiniteType";
    case Verdict::QuasiTiltedCanonical: return "QuasiTiltedCanonical";
    case Verdict::StrictLauraOrTilted: return "StrictLauraOrTilted";
    case Verdict::HereditarySingleBand: return "HereditarySingleBand";
    case Verdict::NotLaura: return "NotLaura";
  }
  return "?";
}

struct BandCensusEntry {
  CyclicWalk band;
  BandBoundary boundary;
};

struct ClassificationReport {
  Verdict verdict = Verdict::FiniteType;
  std::optional<DozeWitness> evidence;  // present iff verdict == NotLaura
  std::vector<BandCensusEntry> bands;
  std::vector<std::string> notes;
  Presentation analyzed;  // the input, or its quotient by J
  bool quotient_by_j = false;
};

/// Presentation the combinatorics runs on: the input if it is a string
/// algebra, R/J if it is special biserial. Anything else is rejected.
inline Presentation string_presentation(const Presentation& p,
                                        bool* quotiented = nullptr) {
  if (validate_string_algebra(p).ok()) {
    if (quotiented) *quotiented = false;
    return p;
  }
  auto sb = validate_special_biserial(p);
  if (!sb.ok()) {
    throw PreconditionError("'" + p.name() +
                            "' is neither a string nor a special biserial "
                            "algebra (condition " +
                            std::to_string(sb.violations.front().condition) +
                            " fails at '" + sb.violations.front().site + "')");
  }
  if (quotiented) *quotiented = true;
  return quotient_by_J(p);
}

inline std::vector<BandCensusEntry> band_census(const Presentation& p) {
  std::vector<BandCensusEntry> out;
  for (auto& b : enumerate_bands(p, pumping_bound(p))) {
    auto boundary = band_boundary(p, b);
    out.push_back({std::move(b), std::move(boundary)});
  }
  return out;
}

inline bool is_single_band_quiver(const Presentation& p,
                                  const std::vector<BandCensusEntry>& census) {
  if (census.size() != 1) return false;
  const auto& e = census.front();
  const Quiver& q = p.quiver();
  return e.boundary.entering.empty() && e.boundary.exiting.empty() &&
         arrows_of(e.band.walk).size() == q.arrow_count() &&
         vertices_of(q, e.band.walk).size() == q.vertex_count();
}

inline ClassificationReport classify(const Presentation& p) {
  ClassificationReport report;
  report.analyzed = string_presentation(p, &report.quotient_by_j);
  if (report.quotient_by_j) {
    report.notes.push_back(
        "special biserial input: analysed on the quotient by the ideal J "
        "generated by the commutativity paths");
  }
  const Presentation& r = report.analyzed;
  if (auto w = find_doze(r)) {
    report.verdict = Verdict::NotLaura;
    report.evidence = std::move(w);
    report.notes.push_back("DOZE found: not laura");
    return report;
  }
  if (!exists_band(r)) {
    report.verdict = Verdict::FiniteType;
    report.notes.push_back("no band: representation-finite");
    return report;
  }
  report.bands = band_census(r);
  if (is_single_band_quiver(r, report.bands)) {
    report.verdict = Verdict::HereditarySingleBand;
    report.notes.push_back("the quiver is a single band without boundary");
    return report;
  }
  for (const auto& e : report.bands) {
    if (!e.boundary.entering.empty() && !e.boundary.exiting.empty()) {
      report.verdict = Verdict::QuasiTiltedCanonical;
      report.notes.push_back("band " + render_band(r.quiver(), e.band) +
                             " has entering and exiting arrows");
      return report;
    }
  }
  report.verdict = Verdict::StrictLauraOrTilted;
  report.notes.push_back("no DOZE; every band is one-sided");
  return report;
}

}  // namespace laura
