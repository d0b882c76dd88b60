#pragma once

// Tilting modules over the path algebra: enumeration as maximal compatible
// sets, complements, the exchange quiver K(A) and its saturation data.

#include "tiltq/approx.hpp"
#include "tiltq/errors.hpp"
#include "tiltq/graph.hpp"
#include "tiltq/quiver.hpp"
#include "tiltq/rep.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace tiltq {

// Indecomposables available for tilting together with their Ext table.
struct TiltingPool {
  QuiverPtr quiver;
  std::vector<Indecomposable> modules;
  std::vector<std::vector<int>> ext;  // ext[i][j] = dim Ext^1(M_i, M_j)
  int window = -1;                    // Kronecker truncation, -1 when the pool is complete

  std::size_t rank() const { return quiver->vertex_count(); }
  std::size_t size() const { return modules.size(); }
  bool compatible(std::size_t i, std::size_t j) const { return ext[i][j] == 0 && ext[j][i] == 0; }
  std::vector<Rep> reps(const std::vector<std::size_t>& idx) const {
    std::vector<Rep> out;
    for (auto i : idx) out.push_back(modules[i].rep);
    return out;
  }
  std::vector<std::string> labels() const {
    std::vector<std::string> out;
    for (const auto& m : modules) out.push_back(window >= 0 ? m.id.tag() : m.id.label());
    return out;
  }
  bool is_window_edge(std::size_t i) const { return window >= 0 && modules[i].id.index == window; }
  std::optional<std::size_t> find(const DimVec& d) const {
    for (std::size_t i = 0; i < modules.size(); ++i)
      if (modules[i].id.dims == d) return i;
    return std::nullopt;
  }
};

inline TiltingPool make_pool(const std::vector<Indecomposable>& mods, const QuiverPtr& q, int window) {
  TiltingPool p{q, mods, {}, window};
  p.ext.assign(mods.size(), std::vector<int>(mods.size(), 0));
  for (std::size_t i = 0; i < mods.size(); ++i)
    for (std::size_t j = 0; j < mods.size(); ++j) p.ext[i][j] = ext1_dim(mods[i].rep, mods[j].rep);
  return p;
}

// Dynkin quivers (any number of components) get the full pool; the Kronecker
// quiver needs a window bound.
inline TiltingPool make_pool(const QuiverPtr& q, std::optional<int> window = std::nullopt) {
  if (q->vertex_count() == 0) return TiltingPool{q, {}, {}, -1};
  if (is_dynkin_quiver(*q)) return make_pool(indecomposables(q), q, -1);
  if (q->is_connected()) {
    const DiagramClass c = classify(*q);
    if (c.family == DiagramFamily::Euclidean && c.series == 'A' && c.rank == 1) {
      if (!window) throw InputError("Kronecker quiver needs --window");
      if (*window < 1) throw InputError("window must be at least 1 to contain a tilting pair");
      return make_pool(kronecker_window(q, *window), q, *window);
    }
    if (c.family == DiagramFamily::Wild) throw InputError("wild quiver: tilting enumeration is not supported");
    throw InputError("Euclidean quiver " + c.name() + ": only the Kronecker quiver is supported");
  }
  throw InputError("disconnected non-Dynkin quiver is not supported");
}

struct TiltingModule {
  std::vector<std::size_t> summands;  // sorted pool indices
  DimVec dims;
};

inline DimVec summed_dims(const TiltingPool& p, const std::vector<std::size_t>& idx) {
  DimVec d(p.rank());
  for (auto i : idx) d = d + p.modules[i].id.dims;
  return d;
}

inline std::vector<std::vector<bool>> compatibility(const TiltingPool& p) {
  std::vector<std::vector<bool>> c(p.size(), std::vector<bool>(p.size(), false));
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < p.size(); ++j) c[i][j] = p.compatible(i, j);
  return c;
}

// For hereditary A, n pairwise compatible rigid indecomposables form a tilting module.
inline std::vector<TiltingModule> enumerate_tilting(const TiltingPool& p) {
  std::vector<TiltingModule> out;
  for (auto& s : enumerate_cliques(compatibility(p), p.rank())) out.push_back({s, summed_dims(p, s)});
  return out;
}

inline bool is_partial_tilting(const TiltingPool& p, const std::vector<std::size_t>& m) {
  for (auto i : m)
    for (auto j : m)
      if (!p.compatible(i, j)) return false;
  return std::set<std::size_t>(m.begin(), m.end()).size() == m.size();
}

inline std::vector<std::size_t> complements(const TiltingPool& p, const std::vector<std::size_t>& m) {
  if (m.size() + 1 != p.rank()) throw InputError("complements: summand set must have n-1 members");
  if (!is_partial_tilting(p, m)) throw InputError("complements: summand set is not partial tilting");
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < p.size(); ++x) {
    if (std::find(m.begin(), m.end(), x) != m.end()) continue;
    bool ok = p.compatible(x, x);
    for (auto i : m) ok = ok && p.compatible(x, i);
    if (ok) out.push_back(x);
  }
  return out;
}

// Vertex positions where the summed dimension vector vanishes.
inline std::vector<std::size_t> zero_support(const DimVec& d) {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < d.size(); ++v)
    if (d[v] == 0) out.push_back(v);
  return out;
}

inline std::vector<std::size_t> zero_support(const TiltingPool& p, const std::vector<std::size_t>& m) { return zero_support(summed_dims(p, m)); }

// Every almost complete set obtained by dropping one summand from a tilting module.
inline std::vector<std::vector<std::size_t>> almost_complete_sets(const std::vector<TiltingModule>& ts) {
  std::set<std::vector<std::size_t>> out;
  for (const auto& t : ts)
    for (std::size_t k = 0; k < t.summands.size(); ++k) {
      auto m = t.summands;
      m.erase(m.begin() + static_cast<std::ptrdiff_t>(k));
      out.insert(m);
    }
  return {out.begin(), out.end()};
}

// Arc X-side -> Y-side when Ext^1(Y, X) != 0, certified by the sequence
// 0 -> X -> E -> Y -> 0 with E the minimal left add(shared)-approximation.
inline TiltingGraph tilting_quiver(const TiltingPool& p, const std::vector<TiltingModule>& ts) {
  TiltingGraph g;
  g.pool_labels = p.labels();
  for (const auto& t : ts) g.vertices.push_back(t.summands);
  for (const auto& pr : exchange_pairs(g.vertices)) {
    const int ya = p.ext[pr.xb][pr.xa], ay = p.ext[pr.xa][pr.xb];
    if ((ya == 0) == (ay == 0)) throw EngineError("tilting_quiver: exchange orientation ambiguous");
    ExchangeArc arc = ya != 0 ? ExchangeArc{pr.a, pr.b, pr.xa, pr.xb, {}} : ExchangeArc{pr.b, pr.a, pr.xb, pr.xa, {}};
    const auto seq = exchange_sequence(RepOps{}, p.modules[arc.x].rep, p.reps(pr.shared));
    if (!seq || !is_isomorphic(seq->cokernel, p.modules[arc.y].rep))
      throw EngineError("tilting_quiver: approximation sequence does not realise the exchange " + g.pool_labels[arc.x] + " -> " +
                        g.pool_labels[arc.y]);
    DimVec middle(p.rank());
    for (auto s : seq->middle.summands) {
      arc.middle.push_back(pr.shared[s]);
      middle = middle + p.modules[pr.shared[s]].id.dims;
    }
    if (middle != p.modules[arc.x].id.dims + p.modules[arc.y].id.dims) throw EngineError("tilting_quiver: dim E != dim X + dim Y");
    g.arcs.push_back(std::move(arc));
  }
  std::sort(g.arcs.begin(), g.arcs.end(), [](const ExchangeArc& a, const ExchangeArc& b) { return std::tie(a.from, a.to) < std::tie(b.from, b.to); });
  return g;
}

inline SaturationInfo saturation(const TiltingGraph& g, std::size_t v, const DimVec& dims, std::size_t n) {
  if (v >= g.vertices.size()) throw InputError("saturation: not a vertex of the graph");
  SaturationInfo s;
  s.s = g.out_degree(v);
  s.e = g.in_degree(v);
  s.sigma = s.s + s.e;
  s.saturated = s.sigma == n;
  s.dim_criterion = std::all_of(dims.values.begin(), dims.values.end(), [](int x) { return x >= 2; });
  return s;
}

// Vertices whose exchange data may be cut off by the Kronecker window.
inline bool window_limited(const TiltingPool& p, const TiltingModule& t) {
  return std::any_of(t.summands.begin(), t.summands.end(), [&](std::size_t i) { return p.is_window_edge(i); });
}

// Number of tilting modules over a Dynkin quiver, as a product over its
// connected components; the empty quiver counts once.
inline std::size_t tilting_count_by_components(const Quiver& q) {
  std::size_t total = 1;
  for (const auto& comp : q.connected_components()) total *= enumerate_tilting(make_pool(share(q.induced(comp)))).size();
  return total;
}

// The projective generator A and its dual DA as pool index sets.
inline std::vector<std::size_t> pool_indices_of(const TiltingPool& p, const std::vector<Rep>& reps) {
  std::vector<std::size_t> out;
  for (const auto& r : reps) {
    const auto i = p.find(r.dims());
    if (!i || !is_isomorphic(p.modules[*i].rep, r)) throw EngineError("pool does not contain a canonical module " + r.dims().str());
    out.push_back(*i);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Constancy of the arc count across orientations

struct OrientationRow {
  unsigned long mask = 0;
  std::string quiver_text;
  std::size_t s = 0;
  std::size_t t = 0;
  std::size_t m = 0;
  std::vector<std::size_t> m_terms;  // m_x per vertex
  bool identity_holds = false;       // 2t + m == n s
};

struct OrientationReport {
  DiagramClass diagram;
  std::size_t n = 0;
  std::vector<OrientationRow> rows;
  bool t_constant = true;
  bool identities_hold = true;
};

inline OrientationRow orientation_row(const Quiver& q, unsigned long mask) {
  auto qp = share(q);
  const TiltingPool pool = make_pool(qp);
  const auto ts = enumerate_tilting(pool);
  const TiltingGraph g = tilting_quiver(pool, ts);
  OrientationRow r;
  r.mask = mask;
  r.quiver_text = q.to_text();
  r.s = ts.size();
  r.t = g.arcs.size();
  for (std::size_t x = 0; x < q.vertex_count(); ++x) {
    r.m_terms.push_back(tilting_count_by_components(delete_vertex(q, q.label(x))));
    r.m += r.m_terms.back();
  }
  r.identity_holds = 2 * r.t + r.m == q.vertex_count() * r.s;
  return r;
}

inline OrientationReport orientation_invariance(const DiagramClass& d) {
  if (d.family != DiagramFamily::Dynkin) throw InputError("orientation_invariance: Dynkin diagram required");
  if (d.rank > 5) throw InputError("orientation_invariance: rank above 5 is over the desk-scale cap");
  OrientationReport rep;
  rep.diagram = d;
  rep.n = d.vertices;
  const auto qs = orientations(d);
  for (std::size_t mask = 0; mask < qs.size(); ++mask) {
    rep.rows.push_back(orientation_row(qs[mask], mask));
    rep.t_constant = rep.t_constant && rep.rows.back().t == rep.rows.front().t;
    rep.identities_hold = rep.identities_hold && rep.rows.back().identity_holds;
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Non-saturated points of the Kronecker window

struct NonSaturatedSet {
  std::vector<std::vector<std::size_t>> parts;  // per vertex position, graph vertex indices
  std::vector<std::size_t> delta;               // union, sorted
  std::vector<std::size_t> flagged;             // non-saturated, not window-limited (direct route)
  bool parts_have_unit_component = true;        // (dim T)_i == 1 for T in part i
  bool agrees = false;
};

inline NonSaturatedSet nonsaturated_tame(const TiltingPool& pool, const std::vector<TiltingModule>& ts, const TiltingGraph& g) {
  const Quiver& q = *pool.quiver;
  if (pool.window < 2) throw InputError("nonsaturated_tame: Kronecker window w >= 2 required");
  NonSaturatedSet out;
  std::set<std::size_t> delta;
  for (std::size_t i = 0; i < q.vertex_count(); ++i) {
    auto sub = share(delete_vertex(q, q.label(i)));
    const TiltingPool sp = make_pool(sub);
    std::vector<std::size_t> part;
    for (const auto& t : enumerate_tilting(sp)) {
      std::vector<std::size_t> m;
      for (auto k : t.summands) {
        const Rep e = extend_by_zero(sp.modules[k].rep, pool.quiver);
        const auto at = pool.find(e.dims());
        if (!at || !is_isomorphic(pool.modules[*at].rep, e))
          throw InputError("nonsaturated_tame: module not found within the window; use a larger w");
        m.push_back(*at);
      }
      std::sort(m.begin(), m.end());
      const auto c = complements(pool, m);
      if (c.size() != 1) throw InputError("nonsaturated_tame: complement not unique within the window; use a larger w");
      m.push_back(c.front());
      const std::size_t v = g.index_of(m);
      if (ts[v].dims[i] != 1) out.parts_have_unit_component = false;
      part.push_back(v);
      delta.insert(v);
    }
    std::sort(part.begin(), part.end());
    out.parts.push_back(std::move(part));
  }
  out.delta.assign(delta.begin(), delta.end());
  for (std::size_t v = 0; v < ts.size(); ++v) {
    if (window_limited(pool, ts[v])) continue;
    if (!saturation(g, v, ts[v].dims, pool.rank()).saturated) out.flagged.push_back(v);
  }
  out.agrees = out.flagged == out.delta;
  return out;
}

}  // namespace tiltq
