#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "laura/classify.hpp"
#include "laura/decomp.hpp"
#include "laura/doze.hpp"
#include "laura/rep.hpp"
#include "laura/validate.hpp"

namespace laura::report {

using nlohmann::ordered_json;

inline constexpr int schema_version = 1;

inline ordered_json header(const char* kind, const Presentation& p) {
  ordered_json j;
  j["schema"] = schema_version;
  j["command"] = kind;
  j["algebra"] = p.name();
  return j;
}

inline ordered_json arrow_list(const Quiver& q, const Path& path) {
  ordered_json out = ordered_json::array();
  for (ArrowIndex a : path.arrows) out.push_back(q.arrow_id(a));
  return out;
}

inline ordered_json witness(const Quiver& q, const DozeWitness& w) {
  ordered_json j;
  j["rho1"] = arrow_list(q, w.rho1);
  j["w1"] = render_walk(q, w.w1);
  j["band"] = render_walk(q, w.band.walk);
  j["w3"] = render_walk(q, w.w3);
  j["rho2"] = arrow_list(q, w.rho2);
  j["assembled"] = render_walk(q, w.assembled(q, 1));
  return j;
}

inline std::string witness_text(const Quiver& q, const DozeWitness& w) {
  auto ids = [&](const Path& p) {
    std::string s;
    for (ArrowIndex a : p.arrows) s += (s.empty() ? "" : " ") + q.arrow_id(a);
    return s;
  };
  return "doze: rho1=[" + ids(w.rho1) + "] w1=[" + render_walk(q, w.w1) + "] band=[" +
         render_walk(q, w.band.walk) + "] w3=[" + render_walk(q, w.w3) + "] rho2=[" +
         ids(w.rho2) + "]";
}

inline ordered_json validation(const Presentation& p) {
  auto s = validate_string_algebra(p);
  auto sb = validate_special_biserial(p);
  ordered_json j = header("validate", p);
  j["string"] = s.ok();
  j["special_biserial"] = sb.ok();
  j["violations"] = ordered_json::array();
  for (const auto& v : s.violations) {
    j["violations"].push_back({{"condition", v.condition}, {"site", v.site}, {"detail", v.detail}});
  }
  return j;
}

inline ordered_json band_entry(const Quiver& q, const BandCensusEntry& e) {
  ordered_json j;
  j["band"] = render_walk(q, e.band.walk);
  ordered_json in = ordered_json::array(), out = ordered_json::array();
  for (ArrowIndex a : e.boundary.entering) in.push_back(q.arrow_id(a));
  for (ArrowIndex a : e.boundary.exiting) out.push_back(q.arrow_id(a));
  j["entering"] = in;
  j["exiting"] = out;
  return j;
}

inline ordered_json classification(const Presentation& p, const ClassificationReport& r) {
  const Quiver& q = r.analyzed.quiver();
  ordered_json j = header("classify", p);
  j["verdict"] = std::string(to_string(r.verdict));
  j["doze"] = r.evidence ? witness(q, *r.evidence) : ordered_json(nullptr);
  j["quotient_by_j"] = r.quotient_by_j;
  j["bands"] = ordered_json::array();
  for (const auto& e : r.bands) j["bands"].push_back(band_entry(q, e));
  j["notes"] = r.notes;
  return j;
}

inline ordered_json subcategory(const Quiver& q, const Subcategory& s) {
  ordered_json j;
  j["name"] = label(s);
  ordered_json objs = ordered_json::array(), arrs = ordered_json::array();
  for (Vertex v : s.objects) objs.push_back(q.vertex_id(v));
  for (ArrowIndex a : s.arrows) arrs.push_back(q.arrow_id(a));
  j["objects"] = objs;
  j["arrows"] = arrs;
  if (s.band) j["band"] = render_walk(q, s.band->walk);
  if (s.anchor) j["anchor"] = q.vertex_id(*s.anchor);
  return j;
}

inline ordered_json decomposition(const Presentation& p, const Presentation& analyzed,
                                  const Decomposition& d) {
  const Quiver& q = analyzed.quiver();
  ordered_json j = header("decompose", p);
  j["A"] = ordered_json::array();
  j["B"] = ordered_json::array();
  for (const auto& s : d.a_parts) j["A"].push_back(subcategory(q, s));
  for (const auto& s : d.b_parts) j["B"].push_back(subcategory(q, s));
  j["C"] = subcategory(q, d.middle);
  j["anchors_agree"] = d.anchors_agree;
  j["notes"] = d.notes;
  return j;
}

inline ordered_json structure(const Presentation& p, const StructureReport& r) {
  ordered_json j = header("check-structure", p);
  j["full"] = r.full;
  j["no_entry"] = r.no_entry;
  j["convex"] = r.convex;
  j["unique_cycle"] = r.unique_cycle;
  j["c_finite"] = r.c_finite;
  j["no_double_zero"] = r.no_double_zero;
  j["all"] = r.all();
  j["failures"] = r.failures;
  return j;
}

inline ordered_json dims(const Quiver& q, const Representation& m) {
  ordered_json j = ordered_json::object();
  for (Vertex v = 0; v < q.vertex_count(); ++v) j[q.vertex_id(v)] = m.dims[v];
  return j;
}

/// Dimension vector plus the nonzero matrix entries as (row, col, value).
inline ordered_json representation(const Quiver& q, const Representation& m) {
  ordered_json j;
  j["dims"] = dims(q, m);
  j["total"] = m.total_dim();
  ordered_json maps = ordered_json::object();
  for (ArrowIndex a = 0; a < q.arrow_count(); ++a) {
    ordered_json triples = ordered_json::array();
    const QMatrix& mat = m.maps[a];
    for (std::size_t r = 0; r < mat.rows(); ++r) {
      for (std::size_t c = 0; c < mat.cols(); ++c) {
        if (mat(r, c) != 0) triples.push_back({r, c, mat(r, c).get_str()});
      }
    }
    maps[q.arrow_id(a)] = triples;
  }
  j["maps"] = maps;
  return j;
}

}  // namespace laura::report
