#pragma once

// Verifier reports: one canonical JSON document plus a text rendering, with
// status violation exactly when counterexamples were recorded.

#include "tiltq/dup.hpp"
#include "tiltq/errors.hpp"
#include "tiltq/quiver.hpp"
#include "tiltq/rep.hpp"
#include "tiltq/tilted.hpp"
#include "tiltq/tilting.hpp"

#include "json.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace tiltq {

using ojson = nlohmann::ordered_json;

enum class Status { Pass, Violation, WindowLimited };

inline std::string status_name(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Violation: return "violation";
    case Status::WindowLimited: return "window-limited";
  }
  return "error";
}

struct Report {
  std::string command;
  std::string quiver;
  std::string theorem;
  bool window_limited = false;
  ojson stats = ojson::object();
  ojson counterexamples = ojson::array();
  ojson identity;  // null unless the claim is an identity
  std::vector<std::string> lines;

  Status status() const {
    if (!counterexamples.empty()) return Status::Violation;
    return window_limited ? Status::WindowLimited : Status::Pass;
  }
  int exit_code() const { return status() == Status::Violation ? 1 : 0; }

  void violation(const std::string& quiver_text, const std::string& detail, ojson summands = ojson::array()) {
    counterexamples.push_back(ojson{{"quiver", quiver_text}, {"summands", std::move(summands)}, {"detail", detail}});
  }

  ojson to_json() const {
    ojson j;
    j["command"] = command;
    j["quiver"] = quiver;
    if (!theorem.empty()) j["theorem"] = theorem;
    j["status"] = status_name(status());
    j["stats"] = stats;
    j["counterexamples"] = counterexamples;
    if (!identity.is_null()) j["identity"] = identity;
    return j;
  }

  std::string text() const {
    std::ostringstream os;
    os << command;
    if (!theorem.empty()) os << " " << theorem;
    os << ": " << status_name(status()) << "\n";
    os << "quiver: " << quiver << "\n";
    for (const auto& l : lines) os << l << "\n";
    for (const auto& c : counterexamples) {
      os << "counterexample";
      if (!c["summands"].empty()) {
        os << " [";
        for (std::size_t k = 0; k < c["summands"].size(); ++k) os << (k ? ", " : "") << c["summands"][k].get<std::string>();
        os << "]";
      }
      os << ": " << c["detail"].get<std::string>() << "\n";
    }
    return os.str();
  }
};

// One quiver to examine, with its one-line description.
struct Subject {
  QuiverPtr quiver;
  std::string text;
};

inline std::string one_line(const Quiver& q) {
  std::string t = q.to_text();
  std::string out;
  for (char c : t) {
    if (c == '\n') {
      if (!out.empty() && out.back() != ' ') out += "; ";
    } else {
      out += c;
    }
  }
  while (!out.empty() && (out.back() == ' ' || out.back() == ';')) out.pop_back();
  return out;
}

inline Subject subject(const Quiver& q) { return {share(q), one_line(q)}; }

inline bool is_kronecker(const Quiver& q) {
  if (!q.is_connected() || q.vertex_count() != 2) return false;
  const DiagramClass c = classify(q);
  return c.family == DiagramFamily::Euclidean && c.series == 'A' && c.rank == 1;
}

inline void require_dynkin(const Subject& s, std::size_t cap, const std::string& what) {
  if (!is_dynkin_quiver(*s.quiver)) throw InputError(what + " needs a Dynkin quiver");
  if (s.quiver->vertex_count() > cap) throw InputError(what + " is capped at rank " + std::to_string(cap));
}

inline ojson labels_json(const std::vector<std::string>& labels, const std::vector<std::size_t>& idx) {
  ojson a = ojson::array();
  for (auto i : idx) a.push_back(labels[i]);
  return a;
}

inline std::string joined(const std::vector<std::string>& labels, const std::vector<std::size_t>& idx) {
  std::string s;
  for (auto i : idx) s += (s.empty() ? "" : "+") + labels[i];
  return s;
}

inline ojson histogram_json(const std::map<std::size_t, std::size_t>& h) {
  ojson j = ojson::object();
  for (const auto& [k, v] : h) j[std::to_string(k)] = v;
  return j;
}

// Tilting data over A for one subject.
struct BaseData {
  TiltingPool pool;
  std::vector<TiltingModule> ts;
  TiltingGraph g;
};

inline BaseData base_data(const Subject& s, std::optional<int> window) {
  BaseData b{make_pool(s.quiver, window), {}, {}};
  b.ts = enumerate_tilting(b.pool);
  b.g = tilting_quiver(b.pool, b.ts);
  return b;
}

constexpr std::size_t kBaseRankCap = 6;
constexpr std::size_t kDupRankCap = 5;
constexpr std::size_t kEndoRankCap = 3;

// ---------------------------------------------------------------------------
// K(A): complements, saturation, non-saturated components

inline void check_complements(Report& r, const Subject& s, std::optional<int> window) {
  const auto b = base_data(s, window);
  const auto labels = b.pool.labels();
  std::size_t sincere = 0, non_sincere = 0, limited = 0;
  for (const auto& m : almost_complete_sets(b.ts)) {
    if (std::any_of(m.begin(), m.end(), [&](std::size_t i) { return b.pool.is_window_edge(i); })) {
      ++limited;
      continue;
    }
    const auto c = complements(b.pool, m);
    const auto z = zero_support(b.pool, m);
    (z.empty() ? sincere : non_sincere)++;
    const std::size_t want = z.empty() ? 2 : 1;
    if (c.size() != want)
      r.violation(s.text, std::to_string(c.size()) + " complements, " + (z.empty() ? "sincere" : "non-sincere"), labels_json(labels, m));
    if (c.size() == 1 && z.size() != 1)
      r.violation(s.text, "one complement but " + std::to_string(z.size()) + " zero components", labels_json(labels, m));
  }
  if (limited) r.window_limited = true;
  r.stats["subjects"].push_back(
      ojson{{"quiver", s.text}, {"almost_complete", sincere + non_sincere + limited}, {"sincere", sincere}, {"non_sincere", non_sincere}, {"window_limited", limited}});
  r.lines.push_back(s.text + ": " + std::to_string(sincere) + " sincere with 2 complements, " + std::to_string(non_sincere) +
                    " non-sincere with 1" + (limited ? ", " + std::to_string(limited) + " at the window edge" : ""));
}

inline void check_saturation(Report& r, const Subject& s, std::optional<int> window) {
  const auto b = base_data(s, window);
  const auto labels = b.pool.labels();
  const std::size_t n = b.pool.rank();
  std::size_t saturated = 0, limited = 0, sigma_total = 0;
  for (std::size_t v = 0; v < b.ts.size(); ++v) {
    const auto info = saturation(b.g, v, b.ts[v].dims, n);
    sigma_total += info.sigma;
    if (window_limited(b.pool, b.ts[v])) {
      ++limited;
      continue;
    }
    saturated += info.saturated;
    if (info.sigma > n) r.violation(s.text, "sigma " + std::to_string(info.sigma) + " exceeds n", labels_json(labels, b.ts[v].summands));
    if (info.saturated != info.dim_criterion)
      r.violation(s.text, std::string(info.saturated ? "saturated" : "not saturated") + " with dim " + b.ts[v].dims.str(),
                  labels_json(labels, b.ts[v].summands));
  }
  if (sigma_total != 2 * b.g.arcs.size()) r.violation(s.text, "sum of sigma differs from twice the arc count");
  const auto cm = canonical_modules(s.quiver);
  for (const auto& [name, reps] : {std::pair{"A", cm.projectives}, std::pair{"DA", cm.injectives}}) {
    const std::size_t v = b.g.index_of(pool_indices_of(b.pool, reps));
    if (saturation(b.g, v, b.ts[v].dims, n).saturated) r.violation(s.text, std::string(name) + " is saturated", labels_json(labels, b.ts[v].summands));
  }
  if (limited) r.window_limited = true;
  r.stats["subjects"].push_back(
      ojson{{"quiver", s.text}, {"tilting", b.ts.size()}, {"saturated", saturated}, {"window_limited", limited}, {"sigma_total", sigma_total}});
  r.lines.push_back(s.text + ": " + std::to_string(b.ts.size()) + " tilting modules, " + std::to_string(saturated) + " saturated" +
                    (limited ? ", " + std::to_string(limited) + " at the window edge" : ""));
}

inline void check_nonsaturated_components(Report& r, const Subject& s, std::optional<int> window) {
  const auto b = base_data(s, window);
  const auto labels = b.pool.labels();
  const auto comps = b.g.weak_components();
  ojson per = ojson::array();
  for (const auto& comp : comps) {
    std::optional<std::size_t> witness;
    bool limited = false;
    for (auto v : comp) {
      if (window_limited(b.pool, b.ts[v])) {
        limited = true;
        continue;
      }
      if (!witness && !saturation(b.g, v, b.ts[v].dims, b.pool.rank()).saturated) witness = v;
    }
    if (witness) {
      per.push_back(ojson{{"size", comp.size()}, {"non_saturated", joined(labels, b.ts[*witness].summands)}});
    } else if (limited) {
      r.window_limited = true;
      per.push_back(ojson{{"size", comp.size()}, {"non_saturated", nullptr}});
    } else {
      r.violation(s.text, "component of " + std::to_string(comp.size()) + " vertices is saturated throughout",
                  labels_json(labels, b.ts[comp.front()].summands));
    }
  }
  if (std::any_of(b.ts.begin(), b.ts.end(), [&](const TiltingModule& t) { return window_limited(b.pool, t); })) r.window_limited = true;
  r.stats["subjects"].push_back(ojson{{"quiver", s.text}, {"components", per}});
  r.lines.push_back(s.text + ": " + std::to_string(comps.size()) + " component(s), each with a non-saturated vertex");
}

inline void check_kronecker_delta(Report& r, const Subject& s, std::optional<int> window) {
  if (!is_kronecker(*s.quiver)) throw InputError("non-saturated set check needs the Kronecker quiver");
  const auto b = base_data(s, window);
  const auto labels = b.pool.labels();
  const auto ns = nonsaturated_tame(b.pool, b.ts, b.g);
  const auto cm = canonical_modules(s.quiver);
  std::vector<std::size_t> want{b.g.index_of(pool_indices_of(b.pool, cm.projectives)), b.g.index_of(pool_indices_of(b.pool, cm.injectives))};
  std::sort(want.begin(), want.end());
  ojson delta = ojson::array();
  for (auto v : ns.delta) delta.push_back(joined(labels, b.ts[v].summands));
  if (ns.delta != want) r.violation(s.text, "non-saturated set is not {A, DA}");
  if (!ns.agrees) r.violation(s.text, "per-vertex construction disagrees with direct saturation flags");
  if (!ns.parts_have_unit_component) r.violation(s.text, "a part contains a module without a unit component");
  r.stats["subjects"].push_back(ojson{{"quiver", s.text}, {"window", b.pool.window}, {"delta", delta}, {"size", ns.delta.size()}});
  r.lines.push_back(s.text + ": non-saturated set " + delta.dump() + " within window " + std::to_string(b.pool.window));
}

inline void check_orientations(Report& r, const DiagramClass& d) {
  const auto rep = orientation_invariance(d);
  ojson rows = ojson::array();
  for (const auto& row : rep.rows) {
    rows.push_back(ojson{{"mask", row.mask}, {"quiver", one_line(parse_quiver(row.quiver_text))}, {"s", row.s}, {"t", row.t}, {"m", row.m}});
    r.lines.push_back("orientation " + std::to_string(row.mask) + ": s=" + std::to_string(row.s) + " t=" + std::to_string(row.t) +
                      " m=" + std::to_string(row.m));
    if (!row.identity_holds)
      r.violation(one_line(parse_quiver(row.quiver_text)), "2t+m = " + std::to_string(2 * row.t + row.m) + " but ns = " + std::to_string(rep.n * row.s));
    if (row.t != rep.rows.front().t) r.violation(one_line(parse_quiver(row.quiver_text)), "arc count " + std::to_string(row.t) + " differs from " + std::to_string(rep.rows.front().t));
  }
  const auto& f = rep.rows.front();
  r.stats["n"] = rep.n;
  r.stats["orientations"] = rows;
  r.identity = ojson{{"n", rep.n}, {"s", f.s}, {"t", f.t}, {"m", f.m}, {"lhs", 2 * f.t + f.m}, {"rhs", rep.n * f.s}};
  r.lines.push_back("identity 2t+m = ns: " + std::to_string(2 * f.t + f.m) + " = " + std::to_string(rep.n * f.s));
}

// ---------------------------------------------------------------------------
// K(A^(1))

inline void check_dup_degrees(Report& r, const Subject& s, bool deep) {
  require_dynkin(s, kDupRankCap, "duplicated algebra check");
  DupContext ctx(s.quiver);
  const auto sets = enumerate_tilting_dup(ctx);
  const auto g = tilting_quiver_dup(ctx, sets);
  const auto labels = ctx.labels();
  std::map<std::size_t, std::size_t> hist;
  for (std::size_t v = 0; v < sets.size(); ++v) {
    ++hist[g.degree(v)];
    if (g.degree(v) != ctx.rank()) r.violation(s.text, "vertex has " + std::to_string(g.degree(v)) + " arcs", labels_json(labels, sets[v]));
  }
  if (!g.weakly_connected()) r.violation(s.text, std::to_string(g.weak_components().size()) + " weak components");
  ojson st{{"quiver", s.text}, {"vertices", sets.size()}, {"arcs", g.arcs.size()}, {"degrees", histogram_json(hist)}, {"connected", g.weakly_connected()}};
  if (deep) {
    std::size_t ok = 0;
    for (const auto& t : sets) {
      if (coresolution_check(ctx, t))
        ++ok;
      else
        r.violation(s.text, "no coresolution of the projectives by add T", labels_json(labels, t));
    }
    st["coresolution_checked"] = ok;
  }
  r.stats["subjects"].push_back(st);
  r.lines.push_back(s.text + ": " + std::to_string(sets.size()) + " vertices, " + std::to_string(g.arcs.size()) + " arcs, degree " +
                    (hist.size() == 1 ? std::to_string(hist.begin()->first) : std::string("mixed")) + (g.weakly_connected() ? ", connected" : ", disconnected"));
}

inline void check_embedding(Report& r, const Subject& s) {
  require_dynkin(s, kDupRankCap, "embedding check");
  DupContext ctx(s.quiver);
  const auto ka = tilting_quiver(ctx.base(), enumerate_tilting(ctx.base()));
  const auto kd = tilting_quiver_dup(ctx, enumerate_tilting_dup(ctx));
  const auto e = verify_embedding(ctx, ka, kd);
  for (const auto& m : e.mismatches) r.violation(s.text, m);
  r.stats["subjects"].push_back(ojson{{"quiver", s.text},
                                      {"vertices", ka.vertices.size()},
                                      {"vertices_mapped", e.vertices_mapped},
                                      {"arcs", ka.arcs.size()},
                                      {"arcs_preserved", e.arcs_preserved},
                                      {"arcs_reflected", e.arcs_reflected}});
  r.lines.push_back(s.text + ": " + std::to_string(e.vertices_mapped) + " vertices mapped, " + std::to_string(e.arcs_preserved) + " arcs preserved, " +
                    std::to_string(e.arcs_reflected) + " reflected");
}

inline void check_shift_completion(Report& r, const Subject& s) {
  require_dynkin(s, kDupRankCap, "shift completion check");
  DupContext ctx(s.quiver);
  const auto res = verify_shift_completion(ctx);
  const auto labels = ctx.base().labels();
  for (const auto& v : res.violations) r.violation(s.text, v);
  std::size_t tilting = 0;
  for (const auto& c : res.cases) tilting += c.tilting;
  r.stats["subjects"].push_back(ojson{{"quiver", s.text},
                                      {"almost_complete", ctx.rank() ? res.cases.size() / ctx.rank() : 0},
                                      {"cases", res.cases.size()},
                                      {"tilting", tilting},
                                      {"non_sincere", res.non_sincere}});
  r.lines.push_back(s.text + ": " + std::to_string(res.cases.size()) + " (module, vertex) cases, " + std::to_string(tilting) + " tilting, " +
                    std::to_string(res.non_sincere) + " non-sincere modules");
}

inline void check_tilted_gldim(Report& r, const Subject& s) {
  require_dynkin(s, kEndoRankCap, "endomorphism algebra check");
  DupContext ctx(s.quiver);
  const auto sets = enumerate_tilting_dup(ctx);
  const auto res = verify_tilted_algebras(ctx, sets);
  for (const auto& v : res.violations) r.violation(s.text, v);
  const int g_triple = dup_global_dimension(ctx), g_endo = regular_endo_global_dimension(ctx);
  if (g_triple != g_endo) r.violation(s.text, "gl.dim of the duplicated algebra: " + std::to_string(g_triple) + " by resolutions, " + std::to_string(g_endo) + " via End");
  if (ctx.rank() >= 2 && (g_triple < 2 || g_triple > 3)) r.violation(s.text, "gl.dim of the duplicated algebra is " + std::to_string(g_triple));
  std::map<std::size_t, std::size_t> hist;
  std::size_t generated = 0;
  for (const auto& row : res.rows) {
    ++hist[static_cast<std::size_t>(row.gldim)];
    generated += row.generated_checked;
  }
  r.stats["subjects"].push_back(ojson{{"quiver", s.text},
                                      {"tilting", sets.size()},
                                      {"gldim_histogram", histogram_json(hist)},
                                      {"max_gldim", res.max_gldim},
                                      {"duplicated_gldim", g_triple},
                                      {"generated_checked", generated}});
  r.lines.push_back(s.text + ": " + std::to_string(sets.size()) + " endomorphism algebras, max gl.dim " + std::to_string(res.max_gldim) +
                    ", duplicated algebra gl.dim " + std::to_string(g_triple));
}

}  // namespace tiltq
