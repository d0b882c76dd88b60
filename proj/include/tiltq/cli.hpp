#pragma once

// Command-line front end. run() parses arguments, dispatches to the report
// builders and returns the exit code: 0 pass or window-limited, 1 violation,
// 2 usage or input error.

#include "tiltq/dup.hpp"
#include "tiltq/errors.hpp"
#include "tiltq/quiver.hpp"
#include "tiltq/report.hpp"
#include "tiltq/tilting.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace tiltq::cli {

struct Options {
  std::string command;
  std::string quiver_file;
  std::string diagram;
  std::optional<int> window;
  std::string dot_file;
  std::string json_file;
  std::string theorem;
  bool deep_check = false;
};

constexpr int kDefaultKroneckerWindow = 6;
constexpr std::size_t kDiagramRankCap = 5;

inline const std::vector<std::string>& theorem_tags() {
  static const std::vector<std::string> tags{"3.1", "4.1", "4.2", "4.3", "5.1", "5.2", "5.4", "5.5", "5.6"};
  return tags;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  out << content;
}

inline DiagramClass checked_diagram(const std::string& name) {
  const DiagramClass d = parse_diagram(name);
  if (d.family != DiagramFamily::Dynkin) throw InputError("--diagram expects a Dynkin type");
  if (d.vertices > kDiagramRankCap) throw InputError("--diagram rank above " + std::to_string(kDiagramRankCap) + " is over the cap");
  return d;
}

struct Inputs {
  std::vector<Subject> subjects;
  std::string description;
  std::optional<DiagramClass> diagram;
  std::optional<int> window;
};

// -q gives one quiver; --diagram gives every orientation of the diagram, or
// only the first when `all` is false.
inline Inputs resolve_inputs(const Options& o, bool all) {
  if (o.quiver_file.empty() == o.diagram.empty()) throw InputError("give exactly one of -q <file> or --diagram <type>");
  Inputs in;
  if (!o.quiver_file.empty()) {
    const Quiver q = parse_quiver(read_file(o.quiver_file));
    in.subjects.push_back(subject(q));
    in.description = in.subjects.front().text;
    if (is_kronecker(q)) {
      in.window = o.window.value_or(kDefaultKroneckerWindow);
    } else if (o.window) {
      throw InputError("--window applies only to the Kronecker quiver");
    }
    if (q.vertex_count() > kBaseRankCap) throw InputError("rank above " + std::to_string(kBaseRankCap) + " is over the cap");
    if (q.is_connected() && q.vertex_count() > 0) {
      const DiagramClass c = classify(q);
      if (c.family == DiagramFamily::Dynkin) in.diagram = c;
    }
    return in;
  }
  if (o.window) throw InputError("--window applies only to the Kronecker quiver");
  const DiagramClass d = checked_diagram(o.diagram);
  in.diagram = d;
  const auto qs = orientations(d);
  const std::size_t count = all ? qs.size() : 1;
  for (std::size_t k = 0; k < count; ++k) in.subjects.push_back(subject(qs[k]));
  in.description = all ? d.name() + " (" + std::to_string(qs.size()) + " orientations)" : in.subjects.front().text;
  return in;
}

// ---------------------------------------------------------------------------
// Commands

inline Report cmd_classify(const Options& o) {
  Report r;
  r.command = "classify";
  if (!o.diagram.empty() && o.quiver_file.empty()) {
    const DiagramClass d = parse_diagram(o.diagram);
    r.quiver = d.name();
    r.stats = ojson{{"family", d.family == DiagramFamily::Dynkin ? "dynkin" : d.family == DiagramFamily::Euclidean ? "euclidean" : "wild"},
                    {"diagram", d.name()},
                    {"n", d.vertices},
                    {"orientations", orientations(d).size()}};
    r.lines.push_back(d.name() + ": " + r.stats["family"].get<std::string>() + ", " + std::to_string(d.vertices) + " vertices");
    return r;
  }
  if (o.quiver_file.empty() || !o.diagram.empty()) throw InputError("give exactly one of -q <file> or --diagram <type>");
  const Quiver q = parse_quiver(read_file(o.quiver_file));
  r.quiver = one_line(q);
  ojson comps = ojson::array();
  for (const auto& c : q.connected_components()) {
    const DiagramClass d = classify(q.induced(c));
    comps.push_back(ojson{{"family", d.family == DiagramFamily::Dynkin ? "dynkin" : d.family == DiagramFamily::Euclidean ? "euclidean" : "wild"},
                          {"diagram", d.name()}});
    r.lines.push_back("component " + d.name() + ": " + comps.back()["family"].get<std::string>());
  }
  r.stats = ojson{{"n", q.vertex_count()}, {"arrows", q.arrows().size()}, {"components", comps}};
  return r;
}

inline Report cmd_indec(const Options& o) {
  const Inputs in = resolve_inputs(o, false);
  const auto& s = in.subjects.front();
  Report r;
  r.command = "indec";
  r.quiver = in.description;
  const TiltingPool pool = make_pool(s.quiver, in.window);
  const auto labels = pool.labels();
  ojson list = ojson::array();
  for (std::size_t k = 0; k < pool.size(); ++k) {
    list.push_back(ojson{{"id", labels[k]}, {"dims", pool.modules[k].id.dims.str()}});
    r.lines.push_back(labels[k] == pool.modules[k].id.dims.str() ? labels[k] : labels[k] + " " + pool.modules[k].id.dims.str());
  }
  r.stats = ojson{{"n", pool.rank()}, {"count", pool.size()}, {"modules", list}};
  if (pool.window >= 0) {
    r.window_limited = true;
    r.stats["window"] = pool.window;
  }
  return r;
}

inline Report cmd_tilting(const Options& o) {
  const Inputs in = resolve_inputs(o, false);
  const auto b = base_data(in.subjects.front(), in.window);
  const auto labels = b.pool.labels();
  Report r;
  r.command = "tilting";
  r.quiver = in.description;
  ojson list = ojson::array();
  for (const auto& t : b.ts) {
    list.push_back(ojson{{"summands", labels_json(labels, t.summands)}, {"dims", t.dims.str()}});
    r.lines.push_back(joined(labels, t.summands) + "  dim " + t.dims.str());
  }
  r.stats = ojson{{"n", b.pool.rank()}, {"s", b.ts.size()}, {"modules", list}};
  if (b.pool.window >= 0) {
    r.window_limited = true;
    r.stats["window"] = b.pool.window;
  }
  return r;
}

inline ojson arcs_json(const TiltingGraph& g) {
  ojson arcs = ojson::array();
  for (const auto& a : g.arcs)
    arcs.push_back(ojson{{"from", g.vertex_label(a.from)},
                         {"to", g.vertex_label(a.to)},
                         {"out", g.pool_labels[a.x]},
                         {"in", g.pool_labels[a.y]},
                         {"middle", labels_json(g.pool_labels, a.middle)}});
  return arcs;
}

inline void graph_lines(Report& r, const TiltingGraph& g) {
  for (std::size_t v = 0; v < g.vertices.size(); ++v) r.lines.push_back("vertex " + g.vertex_label(v));
  for (const auto& a : g.arcs) {
    std::string mid = joined(g.pool_labels, a.middle);
    r.lines.push_back("arc " + g.vertex_label(a.from) + " -> " + g.vertex_label(a.to) + "  (0 -> " + g.pool_labels[a.x] + " -> " + mid + " -> " +
                      g.pool_labels[a.y] + " -> 0)");
  }
}

inline Report cmd_kquiver(const Options& o) {
  const Inputs in = resolve_inputs(o, false);
  const auto b = base_data(in.subjects.front(), in.window);
  Report r;
  r.command = "kquiver";
  r.quiver = in.description;
  graph_lines(r, b.g);
  r.stats = ojson{{"n", b.pool.rank()}, {"s", b.ts.size()}, {"t", b.g.arcs.size()}, {"components", b.g.weak_components().size()}, {"arcs", arcs_json(b.g)}};
  if (b.pool.window >= 0) {
    r.window_limited = true;
    r.stats["window"] = b.pool.window;
  }
  if (!o.dot_file.empty()) write_file(o.dot_file, b.g.to_dot());
  return r;
}

inline Report cmd_dup_kquiver(const Options& o) {
  const Inputs in = resolve_inputs(o, false);
  const auto& s = in.subjects.front();
  require_dynkin(s, kDupRankCap, "dup-kquiver");
  DupContext ctx(s.quiver);
  const auto sets = enumerate_tilting_dup(ctx);
  TiltingGraph g = tilting_quiver_dup(ctx, sets);
  Report r;
  r.command = "dup-kquiver";
  r.quiver = in.description;
  graph_lines(r, g);
  std::map<std::size_t, std::size_t> hist;
  for (std::size_t v = 0; v < sets.size(); ++v) ++hist[g.degree(v)];
  r.stats = ojson{{"n", ctx.rank()}, {"vertices", sets.size()}, {"arcs_count", g.arcs.size()}, {"degrees", histogram_json(hist)}, {"arcs", arcs_json(g)}};
  if (o.deep_check) {
    std::size_t ok = 0;
    for (const auto& t : sets) {
      if (coresolution_check(ctx, t))
        ++ok;
      else
        r.violation(s.text, "no coresolution of the projectives by add T", labels_json(g.pool_labels, t));
    }
    r.stats["coresolution_checked"] = ok;
  }
  if (!o.dot_file.empty()) write_file(o.dot_file, g.to_dot());
  return r;
}

inline Report cmd_orientations(const Options& o) {
  Report r;
  r.command = "orientations";
  DiagramClass d;
  if (!o.diagram.empty() && o.quiver_file.empty()) {
    d = checked_diagram(o.diagram);
  } else {
    const Inputs in = resolve_inputs(o, true);
    if (!in.diagram) throw InputError("orientations needs a connected Dynkin quiver");
    d = *in.diagram;
  }
  r.quiver = d.name();
  check_orientations(r, d);
  return r;
}

inline Report cmd_verify(const Options& o) {
  const auto& tags = theorem_tags();
  if (std::find(tags.begin(), tags.end(), o.theorem) == tags.end()) throw InputError("unknown theorem tag " + o.theorem);
  Report r;
  r.command = "verify";
  r.theorem = o.theorem;
  if (o.theorem == "5.6") {
    DiagramClass d;
    if (!o.diagram.empty() && o.quiver_file.empty()) {
      d = checked_diagram(o.diagram);
    } else {
      const Inputs in = resolve_inputs(o, true);
      if (!in.diagram) throw InputError("orientation check needs a connected Dynkin quiver");
      d = *in.diagram;
    }
    r.quiver = d.name();
    check_orientations(r, d);
    return r;
  }
  const Inputs in = resolve_inputs(o, true);
  r.quiver = in.description;
  r.stats["subjects"] = ojson::array();
  for (const auto& s : in.subjects) {
    if (o.theorem == "3.1") check_tilted_gldim(r, s);
    if (o.theorem == "4.1") check_embedding(r, s);
    if (o.theorem == "4.2") check_dup_degrees(r, s, o.deep_check);
    if (o.theorem == "4.3") check_shift_completion(r, s);
    if (o.theorem == "5.1") check_complements(r, s, in.window);
    if (o.theorem == "5.2") check_saturation(r, s, in.window);
    if (o.theorem == "5.4") check_nonsaturated_components(r, s, in.window);
    if (o.theorem == "5.5") check_kronecker_delta(r, s, in.window);
  }
  return r;
}

// ---------------------------------------------------------------------------

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Tilting modules over path algebras and their duplicated algebras"};
  app.require_subcommand(1);
  Options o;
  auto common = [&](CLI::App* sub, bool window, bool dot, bool deep) {
    sub->add_option("-q,--quiver", o.quiver_file, "quiver file (text or JSON)");
    sub->add_option("--diagram", o.diagram, "Dynkin type, e.g. A3 or D4");
    if (window) sub->add_option("--window", o.window, "Kronecker window bound");
    if (dot) sub->add_option("--dot", o.dot_file, "write the graph in DOT format");
    if (deep) sub->add_flag("--deep-check", o.deep_check, "also verify the coresolution of the projectives");
    sub->add_option("--json", o.json_file, "write the structured report");
  };
  common(app.add_subcommand("classify", "classify the underlying graph"), false, false, false);
  common(app.add_subcommand("indec", "list indecomposable modules"), true, false, false);
  common(app.add_subcommand("tilting", "list tilting modules"), true, false, false);
  common(app.add_subcommand("kquiver", "tilting quiver of the path algebra"), true, true, false);
  common(app.add_subcommand("dup-kquiver", "tilting quiver of the duplicated algebra"), false, true, true);
  common(app.add_subcommand("orientations", "arc counts across orientations"), false, false, false);
  auto* verify = app.add_subcommand("verify", "check one claim exhaustively");
  common(verify, true, false, true);
  verify->add_option("--theorem", o.theorem, "claim tag")->required()->check(CLI::IsMember(theorem_tags()));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  for (auto* sub : app.get_subcommands()) o.command = sub->get_name();

  try {
    Report r;
    if (o.command == "classify") r = cmd_classify(o);
    if (o.command == "indec") r = cmd_indec(o);
    if (o.command == "tilting") r = cmd_tilting(o);
    if (o.command == "kquiver") r = cmd_kquiver(o);
    if (o.command == "dup-kquiver") r = cmd_dup_kquiver(o);
    if (o.command == "orientations") r = cmd_orientations(o);
    if (o.command == "verify") r = cmd_verify(o);
    out << r.text();
    if (!o.json_file.empty()) write_file(o.json_file, r.to_json().dump(2) + "\n");
    return r.exit_code();
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const EngineError& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace tiltq::cli
