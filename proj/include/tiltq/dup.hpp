#pragma once

// Tilting theory over the duplicated algebra: the pool ind A together with the
// shifted summands w_i = tau^{-1}(0, I_i, 0), tilting sets completed by the
// projective-injectives, the exchange quiver and the checks tying it to K(A).

#include "tiltq/approx.hpp"
#include "tiltq/errors.hpp"
#include "tiltq/graph.hpp"
#include "tiltq/rep.hpp"
#include "tiltq/tilting.hpp"
#include "tiltq/triple.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace tiltq {

struct DupPoolEntry {
  enum class Kind { Embedded, Shift };
  Kind kind = Kind::Embedded;
  std::size_t index = 0;  // base pool index, or vertex position for a shift
  std::string label;
  TripleModule module;
};

// Copresentation data behind one shifted summand.
struct ShiftData {
  TripleModule module;
  std::vector<std::size_t> first_injective;   // summands of J0 (injective list indices)
  std::vector<std::size_t> second_injective;  // summands of J1
  std::vector<std::size_t> envelope;          // summands of the envelope of (0, P_i, 0) (projective-injective indices)
};

class DupContext {
 public:
  DupContext(QuiverPtr q, std::optional<int> window = std::nullopt)
      : quiver_(std::move(q)), nd_(std::make_shared<const NakayamaData>(quiver_)), proj_(nd_), base_(make_pool(quiver_, window)) {
    const std::size_t n = rank();
    for (std::size_t a = 0; a < n; ++a) {
      bar_p_.push_back(proj_.top_slot(a));
      top_injectives_.push_back(top_only(nd_, injective(quiver_, a)));
    }
    injectives_ = top_injectives_;
    injectives_.insert(injectives_.end(), bar_p_.begin(), bar_p_.end());
    sigma0_ = proj_.bottom_slots();
    for (std::size_t i = 0; i < n; ++i) {
      shifts_.push_back(compute_shift(i));
      sigma1_.push_back(shifts_.back().module);
    }
    for (const auto& w : sigma1_) {
      auto env = minimal_left_approximation(ops(), w, injectives_);
      if (!ops().is_mono(env.map)) throw EngineError("injective envelope of a shifted summand is not injective");
      auto c = triple_cokernel(env.module, env.map).module;
      if (!c.is_zero()) sigma2_.push_back(std::move(c));
    }
    for (std::size_t k = 0; k < base_.size(); ++k)
      pool_.push_back({DupPoolEntry::Kind::Embedded, k, "E" + base_.modules[k].id.dims.str(), embed(nd_, base_.modules[k].rep)});
    for (std::size_t i = 0; i < n; ++i)
      pool_.push_back({DupPoolEntry::Kind::Shift, i, "W" + std::to_string(quiver_->label(i)), sigma1_[i]});
    for (const auto& e : pool_) steps_.push_back(resolution_step(proj_, e.module));
    ext_.assign(pool_.size(), std::vector<int>(pool_.size(), 0));
    for (std::size_t i = 0; i < pool_.size(); ++i)
      for (std::size_t j = 0; j < pool_.size(); ++j) ext_[i][j] = triple_ext1(proj_, steps_[i], pool_[i].module, pool_[j].module);
  }

  const QuiverPtr& quiver() const { return quiver_; }
  const NakayamaPtr& nakayama_data() const { return nd_; }
  const TripleProjectives& projectives() const { return proj_; }
  const TiltingPool& base() const { return base_; }
  std::size_t rank() const { return quiver_->vertex_count(); }
  TripleOps ops() const { return TripleOps{nd_}; }

  const std::vector<TripleModule>& bar_p() const { return bar_p_; }
  const std::vector<TripleModule>& top_injectives() const { return top_injectives_; }
  const std::vector<TripleModule>& injectives() const { return injectives_; }
  const std::vector<TripleModule>& sigma0() const { return sigma0_; }
  const std::vector<TripleModule>& sigma1() const { return sigma1_; }
  const std::vector<TripleModule>& sigma2() const { return sigma2_; }
  const std::vector<ShiftData>& shifts() const { return shifts_; }
  const TripleModule& omega(std::size_t i) const { return sigma1_.at(i); }

  const std::vector<DupPoolEntry>& pool() const { return pool_; }
  const ResolutionStep& step(std::size_t i) const { return steps_[i]; }
  int ext(std::size_t i, std::size_t j) const { return ext_[i][j]; }
  std::size_t embedded_index(std::size_t base_index) const { return base_index; }
  std::size_t shift_index(std::size_t vertex) const { return base_.size() + vertex; }

  std::vector<std::string> labels() const {
    std::vector<std::string> out;
    for (const auto& e : pool_) out.push_back(e.label);
    for (std::size_t a = 0; a < rank(); ++a) out.push_back("PBAR" + std::to_string(quiver_->label(a)));
    return out;
  }

  // Pool members together with the projective-injectives, which sit at
  // indices pool().size() + a.
  std::vector<TripleModule> modules(const std::vector<std::size_t>& idx) const {
    std::vector<TripleModule> out;
    for (auto i : idx) out.push_back(i < pool_.size() ? pool_[i].module : bar_p_[i - pool_.size()]);
    return out;
  }

  int pd(const TripleModule& m) const { return triple_pd(proj_, m); }
  int ext1(const TripleModule& m, const TripleModule& n) const { return triple_ext1(proj_, m, n); }

 private:
  ShiftData compute_shift(std::size_t i) {
    ShiftData s;
    // copresentation 0 -> (0, I_i, 0) -> J0 -> J1
    const TripleModule m = embed(nd_, injective(quiver_, i));
    auto j0 = minimal_left_approximation(ops(), m, injectives_);
    if (!ops().is_mono(j0.map)) throw EngineError("shift: injective envelope is not injective");
    const auto c0 = triple_cokernel(j0.module, j0.map).module;
    auto j1 = minimal_left_approximation(ops(), c0, injectives_);
    if (!ops().is_mono(j1.map)) throw EngineError("shift: second injective envelope is not injective");
    s.first_injective = j0.summands;
    s.second_injective = j1.summands;
    // J0 must be I(i') = (P_i, nu P_i, 1) and J1 a sum of (I_b, 0, 0): inverse
    // Nakayama then gives (0, P_i, 0) -> sum of (P_b, nu P_b, 1).
    if (j0.summands != std::vector<std::size_t>{rank() + i}) throw EngineError("shift: unexpected first injective term");
    for (auto b : j1.summands)
      if (b >= rank()) throw EngineError("shift: copresentation does not stop with top-slot injectives");
    // The inverse-Nakayama image of J0 -> J1 is a monomorphism into
    // projective-injectives, i.e. the injective envelope of (0, P_i, 0).
    auto env = minimal_left_approximation(ops(), proj_.bottom_slot(i), bar_p_);
    if (!ops().is_mono(env.map)) throw EngineError("shift: envelope of the embedded projective is not injective");
    s.envelope = env.summands;
    std::vector<std::size_t> want = j1.summands, got = env.summands;
    std::sort(want.begin(), want.end());
    std::sort(got.begin(), got.end());
    if (want != got) throw EngineError("shift: inverse Nakayama image does not match the copresentation");
    s.module = triple_cokernel(env.module, env.map).module;
    if (triple_hom_dim(s.module, s.module) != 1) throw EngineError("shift: summand is not a brick");
    if (pd(s.module) > 1) throw EngineError("shift: summand has projective dimension above 1");
    return s;
  }

  QuiverPtr quiver_;
  NakayamaPtr nd_;
  TripleProjectives proj_;
  TiltingPool base_;
  std::vector<TripleModule> bar_p_, top_injectives_, injectives_;
  std::vector<TripleModule> sigma0_, sigma1_, sigma2_;
  std::vector<ShiftData> shifts_;
  std::vector<DupPoolEntry> pool_;
  std::vector<ResolutionStep> steps_;
  std::vector<std::vector<int>> ext_;
};

// Combinatorial compatibility of two pool members.
inline bool pool_rule(const DupContext& ctx, std::size_t i, std::size_t j) {
  const auto& a = ctx.pool()[i];
  const auto& b = ctx.pool()[j];
  using K = DupPoolEntry::Kind;
  if (a.kind == K::Embedded && b.kind == K::Embedded) return ctx.base().compatible(a.index, b.index);
  if (a.kind == K::Shift && b.kind == K::Shift) return true;
  const auto& e = a.kind == K::Embedded ? a : b;
  const auto& s = a.kind == K::Shift ? a : b;
  return ctx.base().modules[e.index].id.dims[s.index] == 0;
}

// Directional identities behind the rule: Ext(w_i, M) = (dim M)_i,
// Ext(M, w_i) = 0, Ext(w_i, w_j) = 0, and Ext over A for embedded pairs.
inline std::vector<std::string> pool_rule_disagreements(const DupContext& ctx) {
  using K = DupPoolEntry::Kind;
  std::vector<std::string> out;
  const auto& pool = ctx.pool();
  for (std::size_t i = 0; i < pool.size(); ++i)
    for (std::size_t j = 0; j < pool.size(); ++j) {
      int expected = 0;
      if (pool[i].kind == K::Embedded && pool[j].kind == K::Embedded) expected = ctx.base().ext[pool[i].index][pool[j].index];
      if (pool[i].kind == K::Shift && pool[j].kind == K::Embedded) expected = ctx.base().modules[pool[j].index].id.dims[pool[i].index];
      if (ctx.ext(i, j) != expected)
        out.push_back("Ext(" + pool[i].label + "," + pool[j].label + ") = " + std::to_string(ctx.ext(i, j)) + ", expected " +
                      std::to_string(expected));
      const bool engine = ctx.ext(i, j) == 0 && ctx.ext(j, i) == 0;
      if (engine != pool_rule(ctx, i, j)) out.push_back("rule mismatch for " + pool[i].label + "," + pool[j].label);
    }
  return out;
}

inline bool is_dup_tilting(const DupContext& ctx, const std::vector<std::size_t>& s) {
  for (auto i : s) {
    if (ctx.step(i).syzygy.is_zero()) continue;
    if (ctx.pd(ctx.step(i).syzygy) != 0) return false;
  }
  for (auto i : s)
    for (auto j : s)
      if (ctx.ext(i, j) != 0) return false;
  return s.size() == ctx.rank();
}

// All n-subsets of the pool that complete the projective-injectives to a
// tilting module. Compatibility comes from the engine's Ext table; the
// combinatorial rule must agree with it everywhere.
inline std::vector<std::vector<std::size_t>> enumerate_tilting_dup(const DupContext& ctx) {
  if (ctx.base().window >= 0) throw InputError("enumerate_tilting_dup: Dynkin base required");
  const auto bad = pool_rule_disagreements(ctx);
  if (!bad.empty()) throw EngineError("pool rule disagrees with the triple engine: " + bad.front());
  const std::size_t k = ctx.pool().size();
  std::vector<std::vector<bool>> c(k, std::vector<bool>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) c[i][j] = pool_rule(ctx, i, j);
  auto sets = enumerate_cliques(c, ctx.rank());
  for (const auto& s : sets)
    if (!is_dup_tilting(ctx, s)) throw EngineError("enumerate_tilting_dup: a rule-compatible set fails the engine check");
  return sets;
}

// The coresolution condition 0 -> P -> T0 -> T1 -> 0 with T0, T1 in add T, for
// every indecomposable projective P.
inline bool coresolution_check(const DupContext& ctx, const std::vector<std::size_t>& s) {
  std::vector<std::size_t> idx = s;
  for (std::size_t a = 0; a < ctx.rank(); ++a) idx.push_back(ctx.pool().size() + a);
  const auto t = ctx.modules(idx);
  const auto ops = ctx.ops();
  for (const auto& p : ctx.sigma0()) {
    const auto l = minimal_left_approximation(ops, p, t);
    if (!ops.is_mono(l.map)) return false;
    const auto c = triple_cokernel(l.module, l.map).module;
    if (c.is_zero()) continue;
    const auto r = minimal_right_approximation(ops, c, t);
    if (!ops.is_iso(r.map)) return false;
  }
  return true;
}

inline TiltingGraph tilting_quiver_dup(const DupContext& ctx, const std::vector<std::vector<std::size_t>>& sets) {
  TiltingGraph g;
  g.pool_labels = ctx.labels();
  g.vertices = sets;
  const auto ops = ctx.ops();
  for (const auto& pr : exchange_pairs(g.vertices)) {
    const int ya = ctx.ext(pr.xb, pr.xa), ay = ctx.ext(pr.xa, pr.xb);
    if ((ya == 0) == (ay == 0)) throw EngineError("tilting_quiver_dup: exchange orientation ambiguous");
    ExchangeArc arc = ya != 0 ? ExchangeArc{pr.a, pr.b, pr.xa, pr.xb, {}} : ExchangeArc{pr.b, pr.a, pr.xb, pr.xa, {}};
    std::vector<std::size_t> shared = pr.shared;
    for (std::size_t a = 0; a < ctx.rank(); ++a) shared.push_back(ctx.pool().size() + a);
    const auto seq = exchange_sequence(ops, ctx.pool()[arc.x].module, ctx.modules(shared));
    if (!seq || !triple_isomorphic(seq->cokernel, ctx.pool()[arc.y].module))
      throw EngineError("tilting_quiver_dup: approximation sequence does not realise the exchange " + g.pool_labels[arc.x] + " -> " +
                        g.pool_labels[arc.y]);
    for (auto s : seq->middle.summands) arc.middle.push_back(shared[s]);
    g.arcs.push_back(std::move(arc));
  }
  std::sort(g.arcs.begin(), g.arcs.end(), [](const ExchangeArc& a, const ExchangeArc& b) { return std::tie(a.from, a.to) < std::tie(b.from, b.to); });
  return g;
}

// ---------------------------------------------------------------------------
// Verifiers

struct EmbeddingReport {
  std::size_t vertices_mapped = 0;
  std::size_t arcs_preserved = 0;
  std::size_t arcs_reflected = 0;
  std::vector<std::string> mismatches;
  bool ok() const { return mismatches.empty(); }
};

// T |-> T (+) PBAR on vertices; arcs must be preserved and reflected.
inline EmbeddingReport verify_embedding(const DupContext& ctx, const TiltingGraph& ka, const TiltingGraph& kdup) {
  EmbeddingReport r;
  std::vector<std::optional<std::size_t>> image(ka.vertices.size());
  std::map<std::size_t, std::size_t> preimage;
  for (std::size_t v = 0; v < ka.vertices.size(); ++v) {
    std::vector<std::size_t> s;
    for (auto i : ka.vertices[v]) s.push_back(ctx.embedded_index(i));
    try {
      image[v] = kdup.index_of(s);
      if (!preimage.emplace(*image[v], v).second) r.mismatches.push_back("two vertices share the image " + kdup.vertex_label(*image[v]));
      ++r.vertices_mapped;
    } catch (const InputError&) {
      r.mismatches.push_back("vertex " + ka.vertex_label(v) + " has no image");
    }
  }
  for (const auto& a : ka.arcs) {
    if (!image[a.from] || !image[a.to]) continue;
    if (kdup.has_arc(*image[a.from], *image[a.to]))
      ++r.arcs_preserved;
    else
      r.mismatches.push_back("arc " + ka.vertex_label(a.from) + " -> " + ka.vertex_label(a.to) + " is not preserved");
  }
  for (const auto& a : kdup.arcs) {
    auto f = preimage.find(a.from), t = preimage.find(a.to);
    if (f == preimage.end() || t == preimage.end()) continue;
    if (ka.has_arc(f->second, t->second))
      ++r.arcs_reflected;
    else
      r.mismatches.push_back("arc " + kdup.vertex_label(a.from) + " -> " + kdup.vertex_label(a.to) + " has no preimage");
  }
  return r;
}

struct ShiftCompletionCase {
  std::vector<std::size_t> almost;  // base pool indices
  std::size_t vertex = 0;
  bool zero_at_vertex = false;
  bool tilting = false;
};

struct ShiftCompletionReport {
  std::vector<ShiftCompletionCase> cases;
  std::vector<std::string> violations;
  std::size_t non_sincere = 0;
  bool ok() const { return violations.empty(); }
};

// For every almost complete tilting A-module M and vertex i:
// M (+) w_i (+) PBAR is tilting exactly when (dim M)_i = 0, decided by the
// engine's Ext table and projective dimensions. Non-sincere M has exactly one
// vanishing component.
inline ShiftCompletionReport verify_shift_completion(const DupContext& ctx) {
  ShiftCompletionReport r;
  const auto& base = ctx.base();
  const auto ts = enumerate_tilting(base);
  auto label = [&](const std::vector<std::size_t>& m) {
    std::string s;
    for (auto i : m) s += (s.empty() ? "" : "+") + base.modules[i].id.label();
    return s;
  };
  for (const auto& m : almost_complete_sets(ts)) {
    const auto z = zero_support(base, m);
    if (!z.empty()) {
      ++r.non_sincere;
      if (z.size() != 1) r.violations.push_back(label(m) + ": non-sincere with " + std::to_string(z.size()) + " zero components");
    }
    for (std::size_t i = 0; i < ctx.rank(); ++i) {
      ShiftCompletionCase c;
      c.almost = m;
      c.vertex = i;
      c.zero_at_vertex = std::find(z.begin(), z.end(), i) != z.end();
      std::vector<std::size_t> s;
      for (auto k : m) s.push_back(ctx.embedded_index(k));
      s.push_back(ctx.shift_index(i));
      c.tilting = is_dup_tilting(ctx, s);
      if (c.tilting != c.zero_at_vertex)
        r.violations.push_back(label(m) + " with W" + std::to_string(ctx.quiver()->label(i)) + ": tilting=" + (c.tilting ? "yes" : "no") +
                               " but zero component=" + (c.zero_at_vertex ? "yes" : "no"));
      r.cases.push_back(std::move(c));
    }
  }
  return r;
}

// Structural checks on a built context; empty when everything holds.
//  - top slots are injective, bottom slots are not;
//  - Ext vanishes between the pool and the projective-injectives, both ways;
//  - each w_i is not an embedded module, and tau w_i has the dimensions of
//    (0, I_i, 0): for pd w_i <= 1, dim (tau w_i) at a vertex is Ext^1(w_i, P)
//    for the projective P at that vertex.
inline std::vector<std::string> context_issues(const DupContext& ctx) {
  std::vector<std::string> out;
  const auto ops = ctx.ops();
  const std::size_t n = ctx.rank();
  const auto& pr = ctx.projectives();
  for (std::size_t a = 0; a < n; ++a) {
    const auto lab = std::to_string(ctx.quiver()->label(a));
    if (!ops_isomorphic(ops, pr.top_slot(a), ctx.injectives()[n + a])) out.push_back("top-slot projective " + lab + " is not injective");
    const auto env = minimal_left_approximation(ops, pr.bottom_slot(a), ctx.injectives());
    if (ops.is_iso(env.map)) out.push_back("bottom-slot projective " + lab + " is injective");
  }
  for (std::size_t i = 0; i < ctx.pool().size(); ++i)
    for (const auto& p : ctx.bar_p())
      if (ctx.ext1(ctx.pool()[i].module, p) != 0 || ctx.ext1(p, ctx.pool()[i].module) != 0)
        out.push_back("Ext between " + ctx.pool()[i].label + " and a projective-injective");
  for (std::size_t i = 0; i < n; ++i) {
    const auto& w = ctx.omega(i);
    const auto lab = "W" + std::to_string(ctx.quiver()->label(i));
    for (const auto& e : ctx.pool())
      if (e.kind == DupPoolEntry::Kind::Embedded && triple_isomorphic(w, e.module)) out.push_back(lab + " is isomorphic to " + e.label);
    const Rep inj = injective(ctx.quiver(), i);
    const auto step = resolution_step(pr, w);
    for (std::size_t a = 0; a < n; ++a) {
      if (triple_ext1(pr, step, w, pr.top_slot(a)) != 0) out.push_back("tau " + lab + " has a top component");
      if (triple_ext1(pr, step, w, pr.bottom_slot(a)) != static_cast<int>(inj.dim(a))) out.push_back("tau " + lab + " differs from the embedded injective");
    }
  }
  return out;
}

// Simple modules (S_a, 0, 0) and (0, S_a, 0).
inline std::vector<TripleModule> dup_simples(const DupContext& ctx) {
  std::vector<TripleModule> out;
  for (std::size_t a = 0; a < ctx.rank(); ++a) out.push_back(top_only(ctx.nakayama_data(), simple(ctx.quiver(), a)));
  for (std::size_t a = 0; a < ctx.rank(); ++a) out.push_back(embed(ctx.nakayama_data(), simple(ctx.quiver(), a)));
  return out;
}

// Maximum projective dimension over the simple modules.
inline int dup_global_dimension(const DupContext& ctx) {
  int g = 0;
  for (const auto& s : dup_simples(ctx)) g = std::max(g, ctx.pd(s));
  return g;
}

}  // namespace tiltq
