// knotplate: command-line front end.
//
// Exit codes: 0 success, 1 usage, 2 invalid or unsupported diagram,
// 3 simplification budget exhausted.

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <future>
#include <iostream>
#include <iterator>
#include <sstream>
#include <thread>

#include "knotplate/complex.hpp"
#include "knotplate/errors.hpp"
#include "knotplate/export.hpp"
#include "knotplate/fixtures.hpp"
#include "knotplate/fundgroup.hpp"
#include "knotplate/layout.hpp"
#include "knotplate/mesh.hpp"
#include "knotplate/version.hpp"

namespace kp = knotplate;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_usage = 1;
constexpr int exit_invalid = 2;
constexpr int exit_budget = 3;

struct Config {
  std::string fixture;
  std::string input;
  std::optional<std::string> pd;  // may be empty: the 0-crossing diagram
  std::optional<std::size_t> outer;
  std::optional<int> tree_root;
  std::string format = "text";
  std::string out;
  std::optional<double> height, saddle_radius, ring_radius;
  std::size_t max_steps = kp::TietzeLimits{}.max_steps;
  std::size_t max_length = kp::TietzeLimits{}.max_total_length;
  std::string which = "all";
  std::string source = "template";
  std::string emit;
  unsigned jobs = 0;
};

std::string fixed3(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f", x);
  return buf;
}

std::string read_all(std::istream& in) { return {std::istreambuf_iterator<char>(in), {}}; }

kp::Diagram load_input(const Config& cfg) {
  const int sources = !cfg.fixture.empty() + !cfg.input.empty() + cfg.pd.has_value();
  if (sources != 1) throw kp::UsageError("give exactly one of --fixture, --input, --pd");
  if (!cfg.fixture.empty()) return kp::load_fixture(cfg.fixture);
  if (cfg.pd) return kp::parse_pd(*cfg.pd);
  if (cfg.input == "-") return kp::parse_pd(read_all(std::cin));
  std::ifstream f(cfg.input);
  if (!f) throw kp::UsageError("cannot read '" + cfg.input + "'");
  return kp::parse_pd(read_all(f));
}

void require_format(const Config& cfg, std::initializer_list<std::string_view> allowed) {
  if (std::find(allowed.begin(), allowed.end(), cfg.format) == allowed.end())
    throw kp::UsageError("--format " + cfg.format + " is not available for this command");
}

kp::OuterFacePolicy outer_policy(const Config& cfg) { return {cfg.outer}; }
kp::TreePolicy tree_policy(const Config& cfg) { return {cfg.tree_root}; }
kp::TietzeLimits limits(const Config& cfg) { return {cfg.max_steps, cfg.max_length}; }

std::string dump(const kp::Json& j) { return j.dump(2) + "\n"; }

// A 0-crossing input with no other content: the round unknot.
bool crossingless(const kp::Diagram& d) { return d.crossing_count() == 0; }

class Runner {
 public:
  explicit Runner(Config cfg) : cfg_(std::move(cfg)) {}

  int info() {
    require_format(cfg_, {"text", "json"});
    const kp::Diagram d = load_input(cfg_);
    const auto report = kp::validate(d, outer_policy(cfg_));
    if (!report.ok) {
      emit(cfg_.format == "json" ? dump({{"validation", kp::to_json(report)}}) : issues_text(report));
      return exit_invalid;
    }
    const auto a = kp::analyze(d, outer_policy(cfg_), tree_policy(cfg_));
    const auto tc = kp::build_complex(a.medial, d);
    const auto k = kp::complex_counts(tc);
    const auto gc = kp::graph_counts(a.medial);
    const std::size_t C = d.crossing_count();
    if (cfg_.format == "json") {
      emit(dump({{"validation", kp::to_json(report)},
                 {"alternating", kp::is_alternating(d)},
                 {"faces", a.medial.faces.size()},
                 {"outer_face", a.medial.faces.outer},
                 {"medial", kp::to_json(a.medial)["counts"]},
                 {"upper_faces", a.upper.bounded_faces.size()},
                 {"lower_faces", a.lower.bounded_faces.size()},
                 {"template", kp::to_json(k)},
                 {"bounds",
                  {{"polygons_12C", 12 * C},
                   {"polygons_11C_plus_E", 11 * C + report.exterior},
                   {"incidences_64C", 64 * C}}}}));
      return exit_ok;
    }
    std::ostringstream o;
    o << "crossings: " << C << "\n"
      << "components: " << report.components << "\n"
      << "exterior (E): " << report.exterior << "\n"
      << "bigons (T): " << report.bigons << "\n"
      << "alternating: " << (kp::is_alternating(d) ? "yes" : "no") << "\n"
      << "faces: " << a.medial.faces.size() << " (outer " << a.medial.faces.outer << ")\n"
      << "medial graph: V=" << gc.vertices << " E=" << gc.edges << " cycle rank=" << gc.cycle_rank << "\n"
      << "skein graphs: upper " << a.upper.bounded_faces.size() << " faces, lower " << a.lower.bounded_faces.size()
      << " faces\n"
      << "template: internal walls=" << k.internal_walls << " ring walls=" << k.ring_walls
      << " saddles=" << k.saddles << " lid facets=" << k.lid_facets << " total=" << k.polygons << "\n"
      << "polygon bounds: 12C=" << 12 * C << " 11C+E=" << 11 * C + report.exterior
      << " four-sided=" << k.four_sided << "\n"
      << "cells: V=" << k.vertices << " E=" << k.edges << " F=" << k.polygons << " euler=" << k.euler << "\n"
      << "edge incidences: " << k.side_incidences << " (64C=" << 64 * C << ", subdivided " << k.edge_incidences
      << ")\n"
      << "lid facet average sides: " << fixed3(k.lid_average_sides) << "\n";
    emit(o.str());
    return exit_ok;
  }

  int graphs() {
    require_format(cfg_, {"text", "json", "dot"});
    if (cfg_.which != "all" && cfg_.which != "medial" && cfg_.which != "upper" && cfg_.which != "lower")
      throw kp::UsageError("--which must be medial, upper, lower or all");
    const kp::Diagram d = load_input(cfg_);
    const auto a = kp::analyze(d, outer_policy(cfg_), tree_policy(cfg_));
    const bool all = cfg_.which == "all";
    if (cfg_.format == "json") {
      kp::Json j;
      if (all || cfg_.which == "medial") j["medial"] = kp::to_json(a.medial);
      if (all || cfg_.which == "upper") j["upper"] = kp::to_json(a.upper);
      if (all || cfg_.which == "lower") j["lower"] = kp::to_json(a.lower);
      if (all) j["spanning_tree"] = kp::to_json(a.tree);
      emit(dump(j));
      return exit_ok;
    }
    std::string out;
    if (all || cfg_.which == "medial") out += kp::to_dot(a.medial);
    if (all || cfg_.which == "upper") out += kp::to_dot(a.upper);
    if (all || cfg_.which == "lower") out += kp::to_dot(a.lower);
    emit(out);
    return exit_ok;
  }

  int present() {
    require_format(cfg_, {"text", "json"});
    const kp::Diagram d = load_input(cfg_);
    const auto a = kp::analyze(d, outer_policy(cfg_), tree_policy(cfg_));
    warn_empty(a.presentation.presentation);
    emit_presentation(a.presentation.presentation);
    return exit_ok;
  }

  int wirtinger() {
    require_format(cfg_, {"text", "json"});
    emit_presentation(kp::wirtinger_presentation(load_input(cfg_)));
    return exit_ok;
  }

  int simplify() {
    require_format(cfg_, {"text", "json"});
    const kp::Diagram d = load_input(cfg_);
    const kp::TietzeResult r = kp::tietze_simplify(source_presentation(d), limits(cfg_));
    if (cfg_.format == "json") emit(dump(kp::to_json(r)));
    else emit(kp::to_text(r.presentation));
    if (!r.final) {
      std::cerr << "knotplate: simplification budget exhausted after " << r.steps << " steps\n";
      return exit_budget;
    }
    return exit_ok;
  }

  int complexity() {
    require_format(cfg_, {"text", "json"});
    const kp::Diagram d = load_input(cfg_);
    const auto a = kp::analyze(d, outer_policy(cfg_), tree_policy(cfg_));
    const auto& p = a.presentation.presentation;
    warn_empty(p);
    const auto r = kp::complexity(p);
    if (cfg_.format == "json") {
      emit(dump(kp::to_json(r)));
      return exit_ok;
    }
    emit(r.geometric_mean ? fixed3(*r.geometric_mean) + "\n" : "undefined (all relators empty)\n");
    return exit_ok;
  }

  int certify() {
    require_format(cfg_, {"text", "json"});
    const kp::Diagram d = load_input(cfg_);
    if (crossingless(d)) {
      emit(cfg_.format == "json" ? dump({{"verdict", "certified"}, {"group", "Z"}, {"note", "no crossings"}})
                                 : "CERTIFIED: pi1 = Z (no crossings)\n");
      return exit_ok;
    }
    const auto c = kp::certify_unknot(d, limits(cfg_), outer_policy(cfg_), tree_policy(cfg_));
    const bool ok = c.verdict == kp::Verdict::certified;
    if (cfg_.format == "json") {
      emit(dump({{"verdict", ok ? "certified" : "inconclusive"}, {"simplified", kp::to_json(c.simplified)}}));
    } else if (ok) {
      emit("CERTIFIED: pi1 = Z\n");
    } else {
      const auto& q = c.simplified.presentation;
      emit("INCONCLUSIVE: " + std::to_string(q.generators.size()) + " generators, " +
           std::to_string(q.relators.size()) + " relators remain\n" + kp::to_text(q));
    }
    return c.simplified.final ? exit_ok : exit_budget;
  }

  int mesh() {
    if (cfg_.format == "text") cfg_.format = "obj";
    require_format(cfg_, {"obj", "json"});
    const kp::Diagram d = load_input(cfg_);
    kp::require_valid(d, outer_policy(cfg_));
    const auto m = kp::build_medial(d, outer_policy(cfg_));
    const auto tc = kp::build_complex(m, d);
    const auto pl = kp::layout(m, d);
    const auto mesh = kp::build_mesh(tc, m, pl, {cfg_.height, cfg_.saddle_radius, cfg_.ring_radius});
    emit(cfg_.format == "json" ? dump(kp::to_json(tc)) : kp::export_obj(mesh));
    return exit_ok;
  }

  int catalog() {
    require_format(cfg_, {"text", "json"});
    if (!cfg_.emit.empty()) {
      const auto f = kp::find_fixture(cfg_.emit);
      if (!f) throw kp::UsageError("unknown fixture '" + cfg_.emit + "'");
      emit(kp::to_pd(kp::parse_pd(f->pd)));
      return exit_ok;
    }
    kp::Json list = kp::Json::array();
    std::ostringstream o;
    for (const auto& f : kp::fixtures()) {
      const kp::Diagram d = kp::parse_pd(f.pd);
      const std::size_t mu = kp::component_count(d);
      list.push_back({{"name", f.name},
                      {"pd", f.pd},
                      {"crossings", d.crossing_count()},
                      {"components", mu},
                      {"description", f.description},
                      {"provenance", f.provenance},
                      {"catalog", f.in_catalog}});
      o << f.name << "\tC=" << d.crossing_count() << "\tmu=" << mu << "\t" << f.description << "\n";
    }
    emit(cfg_.format == "json" ? dump(list) : o.str());
    return exit_ok;
  }

  int scan_assignments() {
    require_format(cfg_, {"text", "json"});
    const kp::Diagram shadow = load_input(cfg_);
    kp::require_valid(shadow, outer_policy(cfg_));
    const std::size_t C = shadow.crossing_count();
    if (C > 16) throw kp::UsageError("scan-assignments enumerates 2^C cases; C must be at most 16");
    const std::size_t cases = std::size_t{1} << C;
    const bool knot = kp::component_count(shadow) == 1;

    std::vector<Row> rows(cases);
    const unsigned hw = std::max(1u, cfg_.jobs ? cfg_.jobs : std::thread::hardware_concurrency());
    std::vector<std::future<void>> workers;
    for (unsigned w = 0; w < hw; ++w) {
      workers.push_back(std::async(std::launch::async, [&, w] {
        for (std::size_t mask = w; mask < cases; mask += hw) rows[mask] = evaluate(shadow, mask, knot);
      }));
    }
    for (auto& f : workers) f.get();

    double best = -1.0;
    for (const Row& r : rows)
      if (r.gm) best = std::max(best, *r.gm);
    bool budget = false;
    kp::Json list = kp::Json::array();
    std::ostringstream o;
    o << "mask\talternating\tlengths\tgeometric\tarithmetic\tverdict\tmaximal\n";
    for (std::size_t mask = 0; mask < cases; ++mask) {
      const Row& r = rows[mask];
      const bool maximal = r.gm && std::abs(*r.gm - best) < 1e-9;
      budget |= r.budget;
      std::string lengths;
      for (std::size_t l : r.lengths) lengths += (lengths.empty() ? "" : ",") + std::to_string(l);
      o << mask << '\t' << (r.alternating ? "yes" : "no") << '\t' << (r.error.empty() ? lengths : "-") << '\t'
        << (r.gm ? fixed3(*r.gm) : "-") << '\t' << (r.error.empty() ? fixed3(r.am) : "-") << '\t'
        << (r.error.empty() ? r.verdict : "unsupported: " + r.error) << '\t' << (maximal ? "*" : "") << "\n";
      kp::Json row = {{"mask", mask}, {"alternating", r.alternating}};
      if (r.error.empty()) {
        row["lengths"] = r.lengths;
        row["geometric_mean"] = r.gm ? kp::Json(*r.gm) : kp::Json(nullptr);
        row["arithmetic_mean"] = r.am;
        row["verdict"] = r.verdict;
      } else {
        row["error"] = r.error;
      }
      row["maximal"] = maximal;
      list.push_back(std::move(row));
    }
    emit(cfg_.format == "json" ? dump({{"crossings", C}, {"cases", list}}) : o.str());
    return budget ? exit_budget : exit_ok;
  }

 private:
  struct Row {
    bool alternating = false;
    std::vector<std::size_t> lengths;
    std::optional<double> gm;
    double am = 0.0;
    std::string verdict;
    std::string error;
    bool budget = false;
  };

  Row evaluate(const kp::Diagram& shadow, std::size_t mask, bool knot) const {
    Row r;
    const kp::Diagram d = kp::apply_flips(shadow, mask);
    r.alternating = kp::is_alternating(d);
    try {
      const auto a = kp::analyze(d, outer_policy(cfg_), tree_policy(cfg_));
      const auto rep = kp::complexity(a.presentation.presentation);
      r.lengths = rep.lengths;
      r.gm = rep.geometric_mean;
      r.am = rep.arithmetic_mean;
      if (knot) {
        const auto c = kp::certify_free_rank_one(a.presentation.presentation, limits(cfg_));
        r.verdict = c.verdict == kp::Verdict::certified ? "certified" : "inconclusive";
        r.budget = !c.simplified.final;
      } else {
        r.verdict = "link";
      }
    } catch (const kp::UnsupportedDiagram& e) {
      r.error = e.what();
    }
    return r;
  }

  kp::Presentation source_presentation(const kp::Diagram& d) const {
    if (cfg_.source == "wirtinger") return kp::wirtinger_presentation(d);
    if (cfg_.source != "template") throw kp::UsageError("--source must be template or wirtinger");
    return kp::analyze(d, outer_policy(cfg_), tree_policy(cfg_)).presentation.presentation;
  }

  static void warn_empty(const kp::Presentation& p) {
    for (std::size_t i = 0; i < p.relators.size(); ++i)
      if (p.relators[i].empty()) std::cerr << "knotplate: warning: relator " << i << " (" << p.provenance[i] << ") is empty\n";
  }

  static std::string issues_text(const kp::ValidationReport& r) {
    std::string s = "invalid diagram:\n";
    for (const auto& i : r.issues) s += "  " + kp::to_string(i.kind) + ": " + i.message + "\n";
    return s;
  }

  void emit_presentation(const kp::Presentation& p) {
    emit(cfg_.format == "json" ? dump(kp::to_json(p)) : kp::to_text(p));
  }

  void emit(const std::string& text) const {
    if (cfg_.out.empty()) {
      std::cout << text;
      return;
    }
    std::ofstream f(cfg_.out, std::ios::binary);
    if (!(f << text)) throw kp::UsageError("cannot write '" + cfg_.out + "'");
  }

  Config cfg_;
};

void add_input(CLI::App* sub, Config& cfg) {
  sub->add_option("--fixture", cfg.fixture, "built-in diagram (see `catalog`)");
  sub->add_option("--input", cfg.input, "PD file, - for stdin");
  sub->add_option("--pd", cfg.pd, "PD text");
  sub->add_option("--outer", cfg.outer, "index of the outer face (default: longest boundary)");
  sub->add_option("--out", cfg.out, "write output to this file");
}

void add_format(CLI::App* sub, Config& cfg, const std::string& choices) {
  sub->add_option("--format", cfg.format, "output format: " + choices);
}

void add_tree(CLI::App* sub, Config& cfg) {
  sub->add_option("--tree-root", cfg.tree_root, "medial vertex rooting the spanning tree");
}

void add_budget(CLI::App* sub, Config& cfg) {
  sub->add_option("--max-steps", cfg.max_steps, "Tietze move budget");
  sub->add_option("--max-length", cfg.max_length, "total relator length budget");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Template complexes and fundamental group presentations of knot diagrams", "knotplate"};
  app.set_version_flag("--version", kp::version);
  app.require_subcommand(1);
  Config cfg;

  auto* info = app.add_subcommand("info", "validation report and template counts");
  add_input(info, cfg);
  add_tree(info, cfg);
  add_format(info, cfg, "text|json");

  auto* graphs = app.add_subcommand("graphs", "medial and skein graphs");
  add_input(graphs, cfg);
  add_tree(graphs, cfg);
  add_format(graphs, cfg, "dot|json");
  graphs->add_option("--which", cfg.which, "medial|upper|lower|all");

  auto* present = app.add_subcommand("present", "raw template presentation");
  add_input(present, cfg);
  add_tree(present, cfg);
  add_format(present, cfg, "text|json");

  auto* wirt = app.add_subcommand("wirtinger", "Wirtinger presentation");
  add_input(wirt, cfg);
  add_format(wirt, cfg, "text|json");

  auto* simplify = app.add_subcommand("simplify", "Tietze-simplified presentation");
  add_input(simplify, cfg);
  add_tree(simplify, cfg);
  add_budget(simplify, cfg);
  add_format(simplify, cfg, "text|json");
  simplify->add_option("--source", cfg.source, "template|wirtinger");

  auto* complexity = app.add_subcommand("complexity", "geometric mean of raw relator lengths");
  add_input(complexity, cfg);
  add_tree(complexity, cfg);
  add_format(complexity, cfg, "text|json");

  auto* certify = app.add_subcommand("certify", "try to certify the unknot (pi1 = Z)");
  add_input(certify, cfg);
  add_tree(certify, cfg);
  add_budget(certify, cfg);
  add_format(certify, cfg, "text|json");

  auto* mesh = app.add_subcommand("mesh", "3D template mesh");
  add_input(mesh, cfg);
  add_format(mesh, cfg, "obj|json");
  mesh->add_option("--height", cfg.height, "lid height H");
  mesh->add_option("--saddle-radius", cfg.saddle_radius, "saddle corner distance r");
  mesh->add_option("--ring-radius", cfg.ring_radius, "ring wall radius R");

  auto* catalog = app.add_subcommand("catalog", "list built-in diagrams");
  add_format(catalog, cfg, "text|json");
  catalog->add_option("--emit", cfg.emit, "print one fixture as PD");
  catalog->add_option("--out", cfg.out, "write output to this file");

  auto* scan = app.add_subcommand("scan-assignments", "all over/under choices of a shadow");
  add_input(scan, cfg);
  add_tree(scan, cfg);
  add_budget(scan, cfg);
  add_format(scan, cfg, "text|json");
  scan->add_option("--jobs", cfg.jobs, "worker threads (default: hardware)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? exit_ok : exit_usage;
  }

  Runner run(cfg);
  try {
    if (*info) return run.info();
    if (*graphs) return run.graphs();
    if (*present) return run.present();
    if (*wirt) return run.wirtinger();
    if (*simplify) return run.simplify();
    if (*complexity) return run.complexity();
    if (*certify) return run.certify();
    if (*mesh) return run.mesh();
    if (*catalog) return run.catalog();
    if (*scan) return run.scan_assignments();
  } catch (const kp::UsageError& e) {
    std::cerr << "knotplate: " << e.what() << "\n";
    return exit_usage;
  } catch (const kp::Error& e) {
    std::cerr << "knotplate: " << e.what() << "\n";
    return exit_invalid;
  } catch (const std::exception& e) {
    std::cerr << "knotplate: " << e.what() << "\n";
    return exit_invalid;
  }
  return exit_usage;
}
