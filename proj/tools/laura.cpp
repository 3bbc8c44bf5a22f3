// Command-line front end: `laura <command> <file.alg> [options]`.
//
// Exit status: 0 success, 1 parse or semantic error in the input (or bad
// command line), 2 precondition violation, 3 internal anomaly or oracle
// disagreement. Diagnostics go to stderr, reports to stdout.

#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "laura/laura.hpp"
#include "laura/report.hpp"

namespace {

using laura::report::ordered_json;

struct Options {
  bool json = false;
  std::uint64_t seed = 1;
  std::string file;
  std::size_t max_len = 0;
  bool max_len_given = false;
  std::size_t min_len = 0;
  std::size_t n = 0;
  std::string walk;
  bool dims_only = false;
  std::size_t count = 0;
};

void emit(const Options& o, const ordered_json& j, const std::string& text) {
  if (o.json) {
    std::cout << j.dump() << "\n";
  } else {
    std::cout << text;
  }
}

std::string join(const std::vector<std::string>& xs, const char* sep = " ") {
  std::string out;
  for (const auto& x : xs) out += (out.empty() ? "" : sep) + x;
  return out;
}

std::string dims_text(const laura::Quiver& q, const laura::Representation& m) {
  std::vector<std::string> parts;
  for (laura::Vertex v = 0; v < q.vertex_count(); ++v) {
    if (m.dims[v]) parts.push_back(q.vertex_id(v) + "=" + std::to_string(m.dims[v]));
  }
  return join(parts) + " (total " + std::to_string(m.total_dim()) + ")";
}

int cmd_validate(const Options& o) {
  auto p = laura::load_algebra(o.file);
  auto j = laura::report::validation(p);
  std::string text = "string=" + std::string(j["string"].get<bool>() ? "true" : "false") +
                     " special_biserial=" +
                     std::string(j["special_biserial"].get<bool>() ? "true" : "false") + "\n";
  for (const auto& v : j["violations"]) {
    text += "violation condition " + std::to_string(v["condition"].get<int>()) + " at " +
            v["site"].get<std::string>() + ": " + v["detail"].get<std::string>() + "\n";
  }
  emit(o, j, text);
  return 0;
}

int cmd_classify(const Options& o) {
  auto p = laura::load_algebra(o.file);
  auto r = laura::classify(p);
  std::string text = std::string(laura::to_string(r.verdict)) + "\n";
  if (r.evidence) text += laura::report::witness_text(r.analyzed.quiver(), *r.evidence) + "\n";
  for (const auto& n : r.notes) text += "note: " + n + "\n";
  emit(o, laura::report::classification(p, r), text);
  return 0;
}

int cmd_doze(const Options& o) {
  auto p = laura::load_algebra(o.file);
  bool quotiented = false;
  auto r = laura::string_presentation(p, &quotiented);
  auto w = laura::find_doze(r);
  ordered_json j = laura::report::header("doze", p);
  j["doze"] = w ? laura::report::witness(r.quiver(), *w) : ordered_json(nullptr);
  j["quotient_by_j"] = quotiented;
  emit(o, j, w ? laura::report::witness_text(r.quiver(), *w) + "\n" : "none\n");
  return 0;
}

int cmd_bands(const Options& o) {
  auto p = laura::load_algebra(o.file);
  auto r = laura::string_presentation(p);
  std::size_t len = o.max_len_given ? o.max_len : laura::pumping_bound(r);
  ordered_json j = laura::report::header("bands", p);
  j["max_len"] = len;
  j["bands"] = ordered_json::array();
  std::string text;
  for (const auto& b : laura::enumerate_bands(r, len)) {
    laura::BandCensusEntry e{b, laura::band_boundary(r, b)};
    j["bands"].push_back(laura::report::band_entry(r.quiver(), e));
    text += laura::render_band(r.quiver(), b) + "\n";
  }
  emit(o, j, text.empty() ? "no bands\n" : text);
  return 0;
}

int cmd_strings(const Options& o) {
  auto p = laura::load_algebra(o.file);
  auto r = laura::string_presentation(p);
  ordered_json j = laura::report::header("strings", p);
  j["max_len"] = o.max_len;
  j["strings"] = ordered_json::array();
  std::string text;
  for (const auto& w : laura::enumerate_strings(r, o.max_len)) {
    auto s = laura::render_walk(r.quiver(), w);
    j["strings"].push_back(s);
    text += s + "\n";
  }
  emit(o, j, text);
  return 0;
}

int cmd_decompose(const Options& o) {
  auto p = laura::load_algebra(o.file);
  auto r = laura::string_presentation(p);
  auto d = laura::decompose(p);
  auto j = laura::report::decomposition(p, r, d);
  std::string text;
  auto line = [&](const ordered_json& s) {
    std::vector<std::string> objs;
    for (const auto& x : s["objects"]) objs.push_back(x.get<std::string>());
    text += s["name"].get<std::string>() + ": " + join(objs);
    if (s.contains("anchor")) text += "  (anchor " + s["anchor"].get<std::string>() + ")";
    text += "\n";
  };
  for (const auto& s : j["A"]) line(s);
  for (const auto& s : j["B"]) line(s);
  line(j["C"]);
  emit(o, j, text);
  return 0;
}

int cmd_check_structure(const Options& o) {
  auto p = laura::load_algebra(o.file);
  auto r = laura::string_presentation(p);
  auto d = laura::decompose(p);
  auto s = laura::check_structure(r, d);
  auto j = laura::report::structure(p, s);
  std::string text;
  for (const char* k : {"full", "no_entry", "convex", "unique_cycle", "c_finite", "no_double_zero"}) {
    text += std::string(k) + ": " + (j[k].get<bool>() ? "pass" : "FAIL") + "\n";
  }
  for (const auto& f : s.failures) text += "  " + f + "\n";
  emit(o, j, text);
  return s.all() ? 0 : 3;
}

int cmd_module(const Options& o) {
  auto p = laura::load_algebra(o.file);
  auto r = laura::string_presentation(p);
  const auto& q = r.quiver();
  auto w = laura::parse_walk(q, o.walk);
  auto m = laura::string_module(r, w);
  ordered_json j = laura::report::header("module", p);
  j["string"] = laura::render_walk(q, w);
  std::string text = dims_text(q, m) + "\n";
  if (o.dims_only) {
    j["dims"] = laura::report::dims(q, m);
    j["total"] = m.total_dim();
  } else {
    auto rep = laura::report::representation(q, m);
    j.update(rep);
    for (laura::ArrowIndex a = 0; a < q.arrow_count(); ++a) {
      if (m.maps[a].empty()) continue;
      std::ostringstream os;
      os << m.maps[a];
      text += q.arrow_id(a) + ":\n" + os.str();
    }
  }
  emit(o, j, text);
  return 0;
}

int cmd_dozed(const Options& o) {
  auto p = laura::load_algebra(o.file);
  auto r = laura::string_presentation(p);
  auto w = laura::find_doze(r);
  if (!w) throw laura::PreconditionError("'" + p.name() + "' has no DOZE");
  const auto& q = r.quiver();
  auto sigma = laura::dozed_string(r, *w, o.n);
  auto m = laura::string_module(r, sigma);
  bool pd = laura::pd_at_least_2(r, m), id = laura::id_at_least_2(r, m);
  ordered_json j = laura::report::header("dozed", p);
  j["n"] = o.n;
  j["string"] = laura::render_walk(q, sigma);
  j["dims"] = laura::report::dims(q, m);
  j["total"] = m.total_dim();
  j["pd_ge_2"] = pd;
  j["id_ge_2"] = id;
  emit(o, j,
       laura::render_walk(q, sigma) + "\n" + dims_text(q, m) + "\npd>=2: " +
           (pd ? "true" : "false") + "\nid>=2: " + (id ? "true" : "false") + "\n");
  return 0;
}

int cmd_scan(const Options& o) {
  auto p = laura::load_algebra(o.file);
  auto r = laura::string_presentation(p);
  const auto& q = r.quiver();
  auto res = laura::conjecture_scan(r, o.max_len, o.min_len);
  // JSON lines: one per witness, then a summary.
  for (const auto& w : res.witnesses) {
    if (o.json) {
      ordered_json line;
      line["schema"] = laura::report::schema_version;
      line["string"] = laura::render_walk(q, w);
      line["length"] = w.length();
      std::cout << line.dump() << "\n";
    } else {
      std::cout << laura::render_walk(q, w) << "\n";
    }
  }
  ordered_json j = laura::report::header("scan", p);
  j["min_len"] = o.min_len;
  j["max_len"] = o.max_len;
  j["count_both_ge2"] = res.count_both_ge2;
  j["note"] = "string modules only; band modules are not scanned";
  emit(o, j, "count " + std::to_string(res.count_both_ge2) + "\n");
  return 0;
}

int cmd_oracle(const Options& o) {
  std::vector<laura::Presentation> corpus;
  if (!o.file.empty()) corpus.push_back(laura::string_presentation(laura::load_algebra(o.file)));
  if (o.count) {
    for (auto& p : laura::random_corpus(o.seed, o.count)) corpus.push_back(std::move(p));
  }
  if (corpus.empty()) throw laura::PreconditionError("oracle-doze needs a file or --random N");
  bool all = true;
  for (const auto& p : corpus) {
    std::size_t len = o.max_len_given ? o.max_len : laura::pumping_bound(p);
    bool exact = laura::find_doze(p).has_value();
    bool brute = laura::find_doze_bruteforce(p, len).has_value();
    all = all && exact == brute;
    ordered_json j = laura::report::header("oracle-doze", p);
    j["max_len"] = len;
    j["exact"] = exact;
    j["bruteforce"] = brute;
    j["agree"] = exact == brute;
    emit(o, j,
         p.name() + ": exact=" + (exact ? "doze" : "none") + " bruteforce=" +
             (brute ? "doze" : "none") + (exact == brute ? " agree" : " DISAGREE") + "\n");
  }
  return all ? 0 : 3;
}

int cmd_generate(const Options& o) {
  for (const auto& p : laura::random_corpus(o.seed, o.count ? o.count : 1)) {
    std::cout << laura::serialize(p) << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"laura: string algebras, DOZE detection and string modules"};
  app.require_subcommand(1);
  Options o;
  app.add_flag("--json", o.json, "machine-readable JSON output (schema 1)");
  app.add_option("--seed", o.seed, "seed for random corpora")->capture_default_str();

  struct Entry {
    const char* name;
    const char* help;
    int (*run)(const Options&);
    CLI::App* sub = nullptr;
  };
  std::vector<Entry> commands = {
      {"validate", "check the string / special biserial conditions", cmd_validate},
      {"classify", "DOZE test and band census", cmd_classify},
      {"doze", "print a DOZE witness or 'none'", cmd_doze},
      {"bands", "list bands up to rotation and inversion", cmd_bands},
      {"strings", "list strings up to inversion", cmd_strings},
      {"decompose", "side algebras A_i, B_j and the middle part C", cmd_decompose},
      {"check-structure", "mechanical checks of the decomposition", cmd_check_structure},
      {"module", "string module of a walk", cmd_module},
      {"dozed", "DOZED module of power n", cmd_dozed},
      {"scan", "string modules with pd >= 2 and id >= 2", cmd_scan},
      {"oracle-doze", "compare find_doze with the brute-force oracle", cmd_oracle},
      {"generate", "print random string algebras", cmd_generate},
  };
  for (auto& c : commands) {
    c.sub = app.add_subcommand(c.name, c.help);
    c.sub->fallthrough();
    std::string name = c.name;
    if (name == "generate") {
      c.sub->add_option("--count", o.count, "number of algebras");
      continue;
    }
    auto* file = c.sub->add_option("file", o.file, "algebra file");
    if (name != "oracle-doze") file->required();
    if (name == "strings" || name == "scan") {
      c.sub->add_option("--max-len", o.max_len, "maximal string length")->required();
    }
    if (name == "bands" || name == "oracle-doze") {
      c.sub->add_option("--max-len", o.max_len, "length bound (default: pumping bound)");
    }
    if (name == "scan") c.sub->add_option("--min-len", o.min_len, "minimal string length");
    if (name == "oracle-doze") c.sub->add_option("--random", o.count, "number of random instances");
    if (name == "module") {
      c.sub->add_option("--string", o.walk, "walk, e.g. 'x4: gamma1 gamma2^-1'")->required();
      c.sub->add_flag("--dims", o.dims_only, "print the dimension vector only");
    }
    if (name == "dozed") c.sub->add_option("--n", o.n, "power of the band")->required();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }
  for (const auto& c : commands) {
    if (!c.sub->parsed()) continue;
    auto* max_len = c.sub->get_option_no_throw("--max-len");
    o.max_len_given = max_len && max_len->count() > 0;
    try {
      return c.run(o);
    } catch (const laura::ParseError& e) {
      std::cerr << o.file << ": " << e.what() << "\n";
      return 1;
    } catch (const laura::SemanticError& e) {
      std::cerr << o.file << ": " << e.what() << "\n";
      return 1;
    } catch (const laura::PreconditionError& e) {
      std::cerr << "precondition: " << e.what() << "\n";
      return 2;
    } catch (const laura::AnomalyError& e) {
      std::cerr << "anomaly: " << e.what() << "\n";
      return 3;
    }
  }
  return 1;
}
