#pragma once

// Modules over the duplicated algebra [[A, 0], [DA, A]] as triples
// (X, Y, phi: nu X -> Y), where nu = D Hom_A(-, A) is the Nakayama functor.
//
// (nu X)_a is the dual of Hom_A(X, P_a) in the basis of its HomSpace, so every
// computation here reduces to A-level Hom systems. The Y slot carries the
// embedded copy of A-mod: (0, P_a, 0) are the projectives that are not
// injective, (P_a, nu P_a, 1) the projective-injectives, (I_a, 0, 0) the
// remaining injectives.

#include "tiltq/approx.hpp"
#include "tiltq/errors.hpp"
#include "tiltq/exactlin.hpp"
#include "tiltq/rep.hpp"

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace tiltq {

// Data of A needed to evaluate nu: projectives and, per arrow a: i -> j, the
// map P_j -> P_i given by q |-> q a.
struct NakayamaData {
  QuiverPtr quiver;
  std::vector<Rep> projectives;
  std::vector<Intertwiner> arrow_maps;

  explicit NakayamaData(QuiverPtr q) : quiver(std::move(q)) {
    for (std::size_t a = 0; a < quiver->vertex_count(); ++a) projectives.push_back(projective(quiver, a));
    for (std::size_t k = 0; k < quiver->arrows().size(); ++k) {
      const Arrow& e = quiver->arrow(k);
      const auto by = paths_by_end(*quiver, e.source);
      RatVector x(projectives[e.source].dim(e.target));
      for (std::size_t c = 0; c < by[e.target].size(); ++c)
        if (by[e.target][c].arrows == std::vector<std::size_t>{k}) x[c] = 1;
      arrow_maps.push_back(map_from_projective(projectives[e.target], e.target, projectives[e.source], x));
    }
  }
};

using NakayamaPtr = std::shared_ptr<const NakayamaData>;

struct NuImage {
  Rep module;
  std::vector<HomSpace> homs;  // Hom_A(X, P_a) per vertex
};

inline NuImage nakayama(const NakayamaData& nd, const Rep& x) {
  NuImage out;
  const Quiver& q = *nd.quiver;
  DimVec d(q.vertex_count());
  for (std::size_t a = 0; a < q.vertex_count(); ++a) {
    out.homs.push_back(hom_space(x, nd.projectives[a]));
    d[a] = static_cast<int>(out.homs.back().dim());
  }
  std::vector<RatMatrix> maps;
  for (std::size_t k = 0; k < q.arrows().size(); ++k) {
    const Arrow& e = q.arrow(k);
    // h |-> rho o h from Hom(X, P_j) to Hom(X, P_i), then dualise.
    RatMatrix r(out.homs[e.source].dim(), out.homs[e.target].dim());
    for (std::size_t c = 0; c < out.homs[e.target].dim(); ++c) {
      const RatVector coord = out.homs[e.source].coordinates(compose(nd.arrow_maps[k], out.homs[e.target].basis[c]));
      for (std::size_t i = 0; i < coord.size(); ++i) r(i, c) = coord[i];
    }
    maps.push_back(r.transpose());
  }
  out.module = Rep(nd.quiver, std::move(d), std::move(maps));
  return out;
}

class TripleModule {
 public:
  TripleModule() = default;

  // Validates equivariance: Y_a phi_i = phi_j (nu X)_a for every arrow a: i -> j.
  TripleModule(NakayamaPtr nd, Rep top, Rep bottom, std::vector<RatMatrix> connect)
      : nd_(std::move(nd)), top_(std::move(top)), bottom_(std::move(bottom)), connect_(std::move(connect)) {
    nu_ = nakayama(*nd_, top_);
    const Quiver& q = *nd_->quiver;
    if (connect_.size() != q.vertex_count()) throw EngineError("TripleModule: one connecting matrix per vertex required");
    for (std::size_t a = 0; a < q.vertex_count(); ++a)
      if (connect_[a].rows() != bottom_.dim(a) || connect_[a].cols() != nu_.module.dim(a))
        throw EngineError("TripleModule: connecting matrix has the wrong shape at vertex " + std::to_string(q.label(a)));
    for (std::size_t k = 0; k < q.arrows().size(); ++k) {
      const Arrow& e = q.arrow(k);
      if (!(bottom_.map(k) * connect_[e.source] == connect_[e.target] * nu_.module.map(k)))
        throw EngineError("TripleModule: connecting map is not A-linear at arrow " + e.id);
    }
  }

  const NakayamaPtr& base() const { return nd_; }
  const Rep& top() const { return top_; }
  const Rep& bottom() const { return bottom_; }
  const std::vector<RatMatrix>& connect() const { return connect_; }
  const NuImage& nu() const { return nu_; }
  int total_dim() const { return top_.total_dim() + bottom_.total_dim(); }
  bool is_zero() const { return top_.is_zero() && bottom_.is_zero(); }
  std::string dims_str() const { return top_.dims().str() + "|" + bottom_.dims().str(); }

 private:
  NakayamaPtr nd_;
  Rep top_;
  Rep bottom_;
  std::vector<RatMatrix> connect_;
  NuImage nu_;
};

struct TripleMorphism {
  Intertwiner top;
  Intertwiner bottom;
};

// nu(f) for f: X -> X', in the dual bases of the two NuImages.
inline std::vector<RatMatrix> nu_map(const NuImage& src, const NuImage& dst, const Intertwiner& f) {
  std::vector<RatMatrix> out;
  for (std::size_t a = 0; a < src.homs.size(); ++a) {
    RatMatrix c(src.homs[a].dim(), dst.homs[a].dim());
    for (std::size_t k = 0; k < dst.homs[a].dim(); ++k) {
      const RatVector coord = src.homs[a].coordinates(compose(dst.homs[a].basis[k], f));
      for (std::size_t i = 0; i < coord.size(); ++i) c(i, k) = coord[i];
    }
    out.push_back(c.transpose());
  }
  return out;
}

// Phi with Phi * u = b, for u with full column rank on the relevant side.
inline RatMatrix solve_right(const RatMatrix& u, const RatMatrix& b) {
  auto t = solve_matrix(u.transpose(), b.transpose());
  if (!t) throw EngineError("triple: induced connecting map does not exist");
  return t->transpose();
}

inline RatMatrix solve_left(const RatMatrix& u, const RatMatrix& b) {
  auto t = solve_matrix(u, b);
  if (!t) throw EngineError("triple: induced connecting map does not exist");
  return *t;
}

inline bool is_triple_morphism(const TripleModule& m, const TripleModule& n, const TripleMorphism& f) {
  if (!is_intertwiner(m.top(), n.top(), f.top) || !is_intertwiner(m.bottom(), n.bottom(), f.bottom)) return false;
  const auto nf = nu_map(m.nu(), n.nu(), f.top);
  for (std::size_t a = 0; a < nf.size(); ++a)
    if (!(f.bottom[a] * m.connect()[a] == n.connect()[a] * nf[a])) return false;
  return true;
}

struct TripleHomSpace {
  std::vector<TripleMorphism> basis;
  HomSpace top_space;
  HomSpace bottom_space;
  std::vector<std::size_t> free_rows;  // over the stacked (top, bottom) coefficient vector

  std::size_t dim() const { return basis.size(); }
  RatVector coordinates(const TripleMorphism& f) const {
    RatVector stacked = top_space.coordinates(f.top);
    const RatVector b = bottom_space.coordinates(f.bottom);
    stacked.insert(stacked.end(), b.begin(), b.end());
    RatVector c(free_rows.size());
    for (std::size_t k = 0; k < free_rows.size(); ++k) c[k] = stacked[free_rows[k]];
    return c;
  }
};

inline TripleHomSpace triple_hom_space(const TripleModule& m, const TripleModule& n) {
  TripleHomSpace out;
  out.top_space = hom_space(m.top(), n.top());
  out.bottom_space = hom_space(m.bottom(), n.bottom());
  const std::size_t p = out.top_space.dim(), r = out.bottom_space.dim();
  const Quiver& q = *m.base()->quiver;
  std::size_t rows = 0;
  for (std::size_t a = 0; a < q.vertex_count(); ++a) rows += n.bottom().dim(a) * m.nu().module.dim(a);
  // g phi - phi' nu(f) = 0, flattened vertex by vertex
  RatMatrix sys(rows, p + r);
  auto place = [&](std::size_t col, const std::vector<RatMatrix>& per_vertex, const Rational& sign) {
    std::size_t row = 0;
    for (const auto& mat : per_vertex)
      for (const auto& x : mat.entries()) {
        if (sgn(x) != 0) sys(row, col) += sign * x;
        ++row;
      }
  };
  for (std::size_t k = 0; k < p; ++k) {
    const auto nf = nu_map(m.nu(), n.nu(), out.top_space.basis[k]);
    std::vector<RatMatrix> term;
    for (std::size_t a = 0; a < nf.size(); ++a) term.push_back(n.connect()[a] * nf[a]);
    place(k, term, Rational(-1));
  }
  for (std::size_t l = 0; l < r; ++l) {
    std::vector<RatMatrix> term;
    for (std::size_t a = 0; a < q.vertex_count(); ++a) term.push_back(out.bottom_space.basis[l][a] * m.connect()[a]);
    place(p + l, term, Rational(1));
  }
  const KernelMatrix ker = kernel_matrix(sys);
  out.free_rows = ker.free_rows;
  for (std::size_t b = 0; b < ker.basis.cols(); ++b) {
    RatVector c(p), d(r);
    for (std::size_t k = 0; k < p; ++k) c[k] = ker.basis(k, b);
    for (std::size_t l = 0; l < r; ++l) d[l] = ker.basis(p + l, b);
    out.basis.push_back({linear_combination(out.top_space.basis, c, m.top(), n.top()),
                         linear_combination(out.bottom_space.basis, d, m.bottom(), n.bottom())});
  }
  return out;
}

inline std::vector<TripleMorphism> triple_hom(const TripleModule& m, const TripleModule& n) { return triple_hom_space(m, n).basis; }
inline std::size_t triple_hom_dim(const TripleModule& m, const TripleModule& n) { return triple_hom_space(m, n).dim(); }

inline TripleMorphism triple_compose(const TripleMorphism& g, const TripleMorphism& f) {
  return {compose(g.top, f.top), compose(g.bottom, f.bottom)};
}

inline TripleMorphism triple_identity(const TripleModule& m) { return {identity_map(m.top()), identity_map(m.bottom())}; }

inline RatVector triple_flatten(const TripleMorphism& f) {
  RatVector out = flatten(f.top);
  const RatVector b = flatten(f.bottom);
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

// ---------------------------------------------------------------------------
// Constructions

inline TripleModule make_triple(const NakayamaPtr& nd, Rep top, Rep bottom) {
  // zero connecting map
  const NuImage nu = nakayama(*nd, top);
  std::vector<RatMatrix> phi;
  for (std::size_t a = 0; a < nd->quiver->vertex_count(); ++a) phi.emplace_back(bottom.dim(a), nu.module.dim(a));
  return TripleModule(nd, std::move(top), std::move(bottom), std::move(phi));
}

inline TripleModule embed(const NakayamaPtr& nd, const Rep& m) { return make_triple(nd, Rep::zero(nd->quiver), m); }
inline TripleModule top_only(const NakayamaPtr& nd, const Rep& m) { return make_triple(nd, m, Rep::zero(nd->quiver)); }

// (X, nu X, 1)
inline TripleModule with_identity(const NakayamaPtr& nd, const Rep& x) {
  const NuImage nu = nakayama(*nd, x);
  std::vector<RatMatrix> phi;
  for (std::size_t a = 0; a < nd->quiver->vertex_count(); ++a) phi.push_back(RatMatrix::identity(nu.module.dim(a)));
  return TripleModule(nd, x, nu.module, std::move(phi));
}

inline std::vector<Intertwiner> block_injections(const std::vector<Rep>& parts, const Rep& sum) {
  std::vector<Intertwiner> out;
  std::vector<std::size_t> offset(sum.quiver().vertex_count(), 0);
  for (const auto& p : parts) {
    Intertwiner inj;
    for (std::size_t v = 0; v < offset.size(); ++v) {
      RatMatrix m(sum.dim(v), p.dim(v));
      for (std::size_t i = 0; i < p.dim(v); ++i) m(offset[v] + i, i) = 1;
      offset[v] += p.dim(v);
      inj.push_back(std::move(m));
    }
    out.push_back(std::move(inj));
  }
  return out;
}

inline TripleModule triple_direct_sum(const std::vector<TripleModule>& parts, const NakayamaPtr& nd) {
  const QuiverPtr& q = nd->quiver;
  std::vector<Rep> tops, bottoms;
  for (const auto& p : parts) {
    tops.push_back(p.top());
    bottoms.push_back(p.bottom());
  }
  Rep x = direct_sum(tops, q), y = direct_sum(bottoms, q);
  const NuImage nu = nakayama(*nd, x);
  const auto inj = block_injections(tops, x);
  std::vector<RatMatrix> phi;
  for (std::size_t a = 0; a < q->vertex_count(); ++a) {
    // phi * [nu(i_1) | nu(i_2) | ...] = blockdiag(phi_k)
    std::vector<RatMatrix> u_parts, d_parts;
    for (std::size_t k = 0; k < parts.size(); ++k) {
      u_parts.push_back(nu_map(parts[k].nu(), nu, inj[k])[a]);
      d_parts.push_back(parts[k].connect()[a]);
    }
    if (u_parts.empty()) {
      phi.emplace_back(0, 0);
      continue;
    }
    phi.push_back(solve_right(hstack(u_parts, nu.module.dim(a)), block_diagonal(d_parts)));
  }
  return TripleModule(nd, std::move(x), std::move(y), std::move(phi));
}

struct TripleKernel {
  TripleModule module;
  TripleMorphism inclusion;
};

struct TripleCokernel {
  TripleModule module;
  TripleMorphism projection;
};

inline TripleKernel triple_kernel(const TripleModule& m, const TripleMorphism& f) {
  const auto kx = kernel(m.top(), f.top);
  const auto ky = kernel(m.bottom(), f.bottom);
  const NuImage nu = nakayama(*m.base(), kx.module);
  const auto ni = nu_map(nu, m.nu(), kx.inclusion);
  std::vector<RatMatrix> phi;
  for (std::size_t a = 0; a < ni.size(); ++a) phi.push_back(solve_left(ky.inclusion[a], m.connect()[a] * ni[a]));
  return {TripleModule(m.base(), kx.module, ky.module, std::move(phi)), {kx.inclusion, ky.inclusion}};
}

inline TripleCokernel triple_cokernel(const TripleModule& n, const TripleMorphism& f) {
  const auto cx = cokernel(n.top(), f.top);
  const auto cy = cokernel(n.bottom(), f.bottom);
  const NuImage nu = nakayama(*n.base(), cx.module);
  const auto np = nu_map(n.nu(), nu, cx.projection);
  std::vector<RatMatrix> phi;
  for (std::size_t a = 0; a < np.size(); ++a) phi.push_back(solve_right(np[a], cy.projection[a] * n.connect()[a]));
  return {TripleModule(n.base(), cx.module, cy.module, std::move(phi)), {cx.projection, cy.projection}};
}

// ---------------------------------------------------------------------------
// Projective covers, syzygies, Ext and projective dimension

struct CoverSummand {
  bool top_slot = false;  // (P_a, nu P_a, 1) when true, (0, P_a, 0) otherwise
  std::size_t vertex = 0;
};

struct ProjectiveCover {
  TripleModule module;
  TripleMorphism map;
  std::vector<CoverSummand> summands;
};

class TripleProjectives {
 public:
  explicit TripleProjectives(NakayamaPtr nd) : nd_(std::move(nd)) {
    for (std::size_t a = 0; a < nd_->quiver->vertex_count(); ++a) {
      top_.push_back(with_identity(nd_, nd_->projectives[a]));
      bottom_.push_back(embed(nd_, nd_->projectives[a]));
    }
  }
  const NakayamaPtr& base() const { return nd_; }
  const TripleModule& top_slot(std::size_t a) const { return top_[a]; }
  const TripleModule& bottom_slot(std::size_t a) const { return bottom_[a]; }
  const std::vector<TripleModule>& top_slots() const { return top_; }
  const std::vector<TripleModule>& bottom_slots() const { return bottom_; }

  ProjectiveCover cover(const TripleModule& n) const {
    const Quiver& q = *nd_->quiver;
    std::vector<TripleModule> parts;
    std::vector<TripleMorphism> comps;
    ProjectiveCover out;
    for (std::size_t a = 0; a < q.vertex_count(); ++a) {
      std::vector<RatMatrix> gens;
      for (auto k : q.incoming(a)) gens.push_back(n.top().map(k));
      const Quotient top = quotient_by(gens.empty() ? RatMatrix(n.top().dim(a), 0) : hstack(gens, n.top().dim(a)));
      for (std::size_t c = 0; c < top.kept.size(); ++c) {
        const TripleModule& p = top_[a];
        const Intertwiner f = map_from_projective(p.top(), a, n.top(), top.section.column(c));
        const auto nf = nu_map(p.nu(), n.nu(), f);
        Intertwiner g;
        for (std::size_t v = 0; v < q.vertex_count(); ++v) g.push_back(n.connect()[v] * nf[v] * p.connect()[v]);
        parts.push_back(p);
        comps.push_back({f, g});
        out.summands.push_back({true, a});
      }
    }
    for (std::size_t a = 0; a < q.vertex_count(); ++a) {
      std::vector<RatMatrix> gens;
      for (auto k : q.incoming(a)) gens.push_back(n.bottom().map(k));
      gens.push_back(n.connect()[a]);
      const Quotient top = quotient_by(hstack(gens, n.bottom().dim(a)));
      for (std::size_t c = 0; c < top.kept.size(); ++c) {
        const TripleModule& p = bottom_[a];
        parts.push_back(p);
        comps.push_back({zero_map(p.top(), n.top()), map_from_projective(p.bottom(), a, n.bottom(), top.section.column(c))});
        out.summands.push_back({false, a});
      }
    }
    out.module = triple_direct_sum(parts, nd_);
    std::vector<Rep> tops, bottoms;
    std::vector<Intertwiner> ftop, fbottom;
    for (std::size_t k = 0; k < parts.size(); ++k) {
      tops.push_back(parts[k].top());
      bottoms.push_back(parts[k].bottom());
      ftop.push_back(comps[k].top);
      fbottom.push_back(comps[k].bottom);
    }
    out.map = {join_from(ftop, tops, n.top()), join_from(fbottom, bottoms, n.bottom())};
    if (!is_epi(out.map.top) || !is_epi(out.map.bottom)) throw EngineError("projective cover is not surjective");
    return out;
  }

  // dim Hom(P, n) for a direct sum of indecomposable projectives.
  std::size_t hom_from_cover(const ProjectiveCover& c, const TripleModule& n) const {
    std::size_t d = 0;
    for (const auto& s : c.summands) d += s.top_slot ? n.top().dim(s.vertex) : n.bottom().dim(s.vertex);
    return d;
  }

 private:
  NakayamaPtr nd_;
  std::vector<TripleModule> top_;
  std::vector<TripleModule> bottom_;
};

inline TripleModule syzygy(const TripleProjectives& pr, const TripleModule& m) {
  const auto c = pr.cover(m);
  return triple_kernel(c.module, c.map).module;
}

// Cap 3: every module over the duplicated algebra has pd at most 3.
inline int triple_pd(const TripleProjectives& pr, const TripleModule& m) {
  TripleModule cur = m;
  for (int k = 0;; ++k) {
    if (cur.is_zero()) return k == 0 ? 0 : k - 1;
    const auto c = pr.cover(cur);
    TripleModule next = triple_kernel(c.module, c.map).module;
    if (next.is_zero()) return k;
    if (k >= 3) throw EngineError("triple_pd: resolution longer than 3");
    cur = std::move(next);
  }
}

struct ResolutionStep {
  ProjectiveCover cover;
  TripleModule syzygy;
};

// Ext^1(M, N) from 0 -> Hom(M,N) -> Hom(P0,N) -> Hom(Omega M,N) -> Ext^1(M,N) -> 0.
inline int triple_ext1(const TripleProjectives& pr, const ResolutionStep& m_step, const TripleModule& m, const TripleModule& n) {
  const int e = static_cast<int>(triple_hom_dim(m, n)) - static_cast<int>(pr.hom_from_cover(m_step.cover, n)) +
                static_cast<int>(triple_hom_dim(m_step.syzygy, n));
  if (e < 0) throw EngineError("triple_ext1: negative dimension");
  return e;
}

inline ResolutionStep resolution_step(const TripleProjectives& pr, const TripleModule& m) {
  auto c = pr.cover(m);
  auto k = triple_kernel(c.module, c.map).module;
  return {std::move(c), std::move(k)};
}

inline int triple_ext1(const TripleProjectives& pr, const TripleModule& m, const TripleModule& n) {
  return triple_ext1(pr, resolution_step(pr, m), m, n);
}

// Category interface for the approximation templates.
struct TripleOps {
  using Module = TripleModule;
  using Morphism = TripleMorphism;
  NakayamaPtr nd;

  struct Cok {
    TripleModule module;
    TripleMorphism projection;
  };
  struct Ker {
    TripleModule module;
    TripleMorphism inclusion;
  };
  std::vector<Morphism> hom(const Module& a, const Module& b) const { return triple_hom(a, b); }
  Morphism compose(const Morphism& g, const Morphism& f) const { return triple_compose(g, f); }
  RatVector flatten(const Morphism& f) const { return triple_flatten(f); }
  Morphism identity(const Module& m) const { return triple_identity(m); }
  Morphism combine(const std::vector<Morphism>& basis, const RatVector& c, const Module& a, const Module& b) const {
    std::vector<Intertwiner> t, u;
    for (const auto& m : basis) {
      t.push_back(m.top);
      u.push_back(m.bottom);
    }
    return {linear_combination(t, c, a.top(), b.top()), linear_combination(u, c, a.bottom(), b.bottom())};
  }
  Module direct_sum(const std::vector<Module>& parts, const Module&) const { return triple_direct_sum(parts, nd); }
  Morphism into_sum(const std::vector<Morphism>& comps, const Module& source, const std::vector<Module>& targets) const {
    std::vector<Intertwiner> t, u;
    std::vector<Rep> tt, ut;
    for (std::size_t k = 0; k < comps.size(); ++k) {
      t.push_back(comps[k].top);
      u.push_back(comps[k].bottom);
      tt.push_back(targets[k].top());
      ut.push_back(targets[k].bottom());
    }
    return {stack_into(t, source.top(), tt), stack_into(u, source.bottom(), ut)};
  }
  Morphism from_sum(const std::vector<Morphism>& comps, const std::vector<Module>& sources, const Module& target) const {
    std::vector<Intertwiner> t, u;
    std::vector<Rep> ts, us;
    for (std::size_t k = 0; k < comps.size(); ++k) {
      t.push_back(comps[k].top);
      u.push_back(comps[k].bottom);
      ts.push_back(sources[k].top());
      us.push_back(sources[k].bottom());
    }
    return {join_from(t, ts, target.top()), join_from(u, us, target.bottom())};
  }
  Cok cokernel(const Module& target, const Morphism& f) const {
    auto c = triple_cokernel(target, f);
    return {std::move(c.module), std::move(c.projection)};
  }
  Ker kernel(const Module& source, const Morphism& f) const {
    auto k = triple_kernel(source, f);
    return {std::move(k.module), std::move(k.inclusion)};
  }
  bool is_mono(const Morphism& f) const { return tiltq::is_mono(f.top) && tiltq::is_mono(f.bottom); }
  bool is_epi(const Morphism& f) const { return tiltq::is_epi(f.top) && tiltq::is_epi(f.bottom); }
  bool is_iso(const Morphism& f) const { return tiltq::is_iso(f.top) && tiltq::is_iso(f.bottom); }
  bool is_zero(const Module& m) const { return m.is_zero(); }
  int total_dim(const Module& m) const { return m.total_dim(); }
};

inline bool triple_isomorphic(const TripleModule& a, const TripleModule& b) {
  if (a.top().dims() != b.top().dims() || a.bottom().dims() != b.bottom().dims()) return false;
  return ops_isomorphic(TripleOps{a.base()}, a, b);
}

}  // namespace tiltq
