#pragma once

// Representations of an acyclic quiver over the rationals: canonical modules,
// morphism spaces, reflection functors and Auslander-Reiten translates.
//
// Convention: paths act on the left, so the projective P_a has basis the paths
// starting at a and Hom(P_a, M) = M_a. Reversing this convention swaps the
// roles of projectives and injectives everywhere.

#include "tiltq/errors.hpp"
#include "tiltq/exactlin.hpp"
#include "tiltq/quiver.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace tiltq {

using QuiverPtr = std::shared_ptr<const Quiver>;

inline QuiverPtr share(Quiver q) { return std::make_shared<const Quiver>(std::move(q)); }

class Rep {
 public:
  Rep() : quiver_(share(Quiver{})) {}

  Rep(QuiverPtr q, DimVec dims, std::vector<RatMatrix> maps)
      : quiver_(std::move(q)), dims_(std::move(dims)), maps_(std::move(maps)) {
    if (dims_.size() != quiver_->vertex_count()) throw InputError("Rep: dimension vector does not match the quiver");
    if (maps_.size() != quiver_->arrows().size()) throw InputError("Rep: one matrix per arrow required");
    for (std::size_t k = 0; k < maps_.size(); ++k) {
      const Arrow& a = quiver_->arrow(k);
      if (maps_[k].rows() != static_cast<std::size_t>(dims_[a.target]) ||
          maps_[k].cols() != static_cast<std::size_t>(dims_[a.source]))
        throw InputError("Rep: matrix for arrow " + a.id + " has the wrong shape");
    }
  }

  static Rep zero(QuiverPtr q) {
    DimVec d(q->vertex_count());
    std::vector<RatMatrix> maps;
    for (const auto& a : q->arrows()) {
      (void)a;
      maps.emplace_back(0, 0);
    }
    return Rep(std::move(q), std::move(d), std::move(maps));
  }

  const Quiver& quiver() const { return *quiver_; }
  const QuiverPtr& quiver_ptr() const { return quiver_; }
  const DimVec& dims() const { return dims_; }
  std::size_t dim(std::size_t v) const { return static_cast<std::size_t>(dims_[v]); }
  const RatMatrix& map(std::size_t arrow) const { return maps_[arrow]; }
  const std::vector<RatMatrix>& maps() const { return maps_; }
  int total_dim() const { return dims_.total(); }
  bool is_zero() const { return dims_.is_zero(); }

  friend bool operator==(const Rep& a, const Rep& b) {
    return *a.quiver_ == *b.quiver_ && a.dims_ == b.dims_ && a.maps_ == b.maps_;
  }

 private:
  QuiverPtr quiver_;
  DimVec dims_;
  std::vector<RatMatrix> maps_;
};

// A morphism of representations: one matrix per vertex, shape N_v x M_v.
using Intertwiner = std::vector<RatMatrix>;

inline void require_same_quiver(const Rep& m, const Rep& n, const char* where) {
  if (!(m.quiver() == n.quiver())) throw InputError(std::string(where) + ": representations over different quivers");
}

inline Intertwiner zero_map(const Rep& m, const Rep& n) {
  Intertwiner f;
  for (std::size_t v = 0; v < m.quiver().vertex_count(); ++v) f.emplace_back(n.dim(v), m.dim(v));
  return f;
}

inline Intertwiner identity_map(const Rep& m) {
  Intertwiner f;
  for (std::size_t v = 0; v < m.quiver().vertex_count(); ++v) f.push_back(RatMatrix::identity(m.dim(v)));
  return f;
}

inline Intertwiner compose(const Intertwiner& g, const Intertwiner& f) {
  Intertwiner h;
  h.reserve(f.size());
  for (std::size_t v = 0; v < f.size(); ++v) h.push_back(g[v] * f[v]);
  return h;
}

inline Intertwiner linear_combination(const std::vector<Intertwiner>& basis, const RatVector& coeff, const Rep& m, const Rep& n) {
  Intertwiner f = zero_map(m, n);
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (sgn(coeff[k]) == 0) continue;
    for (std::size_t v = 0; v < f.size(); ++v) f[v] = f[v] + coeff[k] * basis[k][v];
  }
  return f;
}

inline RatVector flatten(const Intertwiner& f) {
  RatVector out;
  for (const auto& m : f) out.insert(out.end(), m.entries().begin(), m.entries().end());
  return out;
}

inline bool is_zero_map(const Intertwiner& f) {
  return std::all_of(f.begin(), f.end(), [](const RatMatrix& m) { return m.is_zero(); });
}

inline bool is_intertwiner(const Rep& m, const Rep& n, const Intertwiner& f) {
  const Quiver& q = m.quiver();
  if (f.size() != q.vertex_count()) return false;
  for (std::size_t v = 0; v < f.size(); ++v)
    if (f[v].rows() != n.dim(v) || f[v].cols() != m.dim(v)) return false;
  for (std::size_t k = 0; k < q.arrows().size(); ++k) {
    const Arrow& a = q.arrow(k);
    if (!(f[a.target] * m.map(k) == n.map(k) * f[a.source])) return false;
  }
  return true;
}

// Basis of Hom(M, N) together with the coordinates at which the basis is the
// identity, so that coordinate extraction is a row selection.
struct HomSpace {
  std::vector<Intertwiner> basis;
  std::vector<std::size_t> free_rows;

  std::size_t dim() const { return basis.size(); }
  RatVector coordinates(const Intertwiner& f) const {
    const RatVector flat = flatten(f);
    RatVector c(free_rows.size());
    for (std::size_t k = 0; k < free_rows.size(); ++k) c[k] = flat[free_rows[k]];
    return c;
  }
};

// Solves f_j M_a = N_a f_i for every arrow a: i -> j.
inline HomSpace hom_space(const Rep& m, const Rep& n) {
  require_same_quiver(m, n, "hom_basis");
  const Quiver& q = m.quiver();
  const std::size_t nv = q.vertex_count();
  std::vector<std::size_t> offset(nv + 1, 0);
  for (std::size_t v = 0; v < nv; ++v) offset[v + 1] = offset[v] + n.dim(v) * m.dim(v);
  const std::size_t unknowns = offset[nv];
  std::size_t equations = 0;
  for (const auto& a : q.arrows()) equations += n.dim(a.target) * m.dim(a.source);
  RatMatrix sys(equations, unknowns);
  std::size_t row = 0;
  for (std::size_t k = 0; k < q.arrows().size(); ++k) {
    const Arrow& a = q.arrow(k);
    const std::size_t i = a.source, j = a.target;
    const RatMatrix& ma = m.map(k);
    const RatMatrix& na = n.map(k);
    for (std::size_t r = 0; r < n.dim(j); ++r)
      for (std::size_t c = 0; c < m.dim(i); ++c, ++row) {
        for (std::size_t t = 0; t < m.dim(j); ++t)
          if (sgn(ma(t, c)) != 0) sys(row, offset[j] + r * m.dim(j) + t) += ma(t, c);
        for (std::size_t t = 0; t < n.dim(i); ++t)
          if (sgn(na(r, t)) != 0) sys(row, offset[i] + t * m.dim(i) + c) -= na(r, t);
      }
  }
  const KernelMatrix ker = kernel_matrix(sys);
  HomSpace out;
  out.free_rows = ker.free_rows;
  for (std::size_t b = 0; b < ker.basis.cols(); ++b) {
    Intertwiner f;
    for (std::size_t v = 0; v < nv; ++v) {
      RatMatrix fv(n.dim(v), m.dim(v));
      for (std::size_t r = 0; r < n.dim(v); ++r)
        for (std::size_t c = 0; c < m.dim(v); ++c) fv(r, c) = ker.basis(offset[v] + r * m.dim(v) + c, b);
      f.push_back(std::move(fv));
    }
    out.basis.push_back(std::move(f));
  }
  return out;
}

inline std::vector<Intertwiner> hom_basis(const Rep& m, const Rep& n) { return hom_space(m, n).basis; }
inline std::size_t hom_dim(const Rep& m, const Rep& n) { return hom_space(m, n).dim(); }

inline int ext1_dim(const Rep& m, const Rep& n) {
  const int ext = static_cast<int>(hom_dim(m, n)) - euler_form(m.quiver(), m.dims(), n.dims());
  if (ext < 0) throw EngineError("ext1_dim: negative value; Hom and Euler form disagree");
  return ext;
}

inline bool is_rigid(const Rep& m) { return ext1_dim(m, m) == 0; }

// ---------------------------------------------------------------------------
// Paths and canonical modules

struct Path {
  std::size_t start = 0;
  std::size_t end = 0;
  std::vector<std::size_t> arrows;  // in order of traversal
};

inline std::vector<Path> paths_from(const Quiver& q, std::size_t a) {
  std::vector<Path> out{{a, a, {}}};
  for (std::size_t k = 0; k < out.size(); ++k) {
    for (std::size_t e : q.outgoing(out[k].end)) {
      Path p = out[k];
      p.arrows.push_back(e);
      p.end = q.arrow(e).target;
      out.push_back(std::move(p));
    }
  }
  return out;
}

// Paths from a grouped by endpoint; the position inside a group is the basis index.
inline std::vector<std::vector<Path>> paths_by_end(const Quiver& q, std::size_t a) {
  std::vector<std::vector<Path>> by(q.vertex_count());
  for (auto& p : paths_from(q, a)) by[p.end].push_back(std::move(p));
  return by;
}

inline std::size_t path_count(const Quiver& q, std::size_t from, std::size_t to) {
  std::size_t c = 0;
  for (const auto& p : paths_from(q, from))
    if (p.end == to) ++c;
  return c;
}

inline Rep projective(const QuiverPtr& q, std::size_t a) {
  const auto by = paths_by_end(*q, a);
  DimVec d(q->vertex_count());
  for (std::size_t v = 0; v < by.size(); ++v) d[v] = static_cast<int>(by[v].size());
  std::vector<RatMatrix> maps;
  for (std::size_t k = 0; k < q->arrows().size(); ++k) {
    const Arrow& e = q->arrow(k);
    RatMatrix m(by[e.target].size(), by[e.source].size());
    for (std::size_t c = 0; c < by[e.source].size(); ++c) {
      auto ext = by[e.source][c].arrows;
      ext.push_back(k);
      for (std::size_t r = 0; r < by[e.target].size(); ++r)
        if (by[e.target][r].arrows == ext) m(r, c) = 1;
    }
    maps.push_back(std::move(m));
  }
  return Rep(q, std::move(d), std::move(maps));
}

inline Rep injective(const QuiverPtr& q, std::size_t a) {
  // (I_a)_b is dual to the paths b ~> a; an arrow e: i -> j sends p* to
  // (p without its first arrow)* when p starts with e.
  std::vector<std::vector<Path>> into(q->vertex_count());
  for (std::size_t b = 0; b < q->vertex_count(); ++b)
    for (auto& p : paths_from(*q, b))
      if (p.end == a) into[b].push_back(std::move(p));
  DimVec d(q->vertex_count());
  for (std::size_t v = 0; v < into.size(); ++v) d[v] = static_cast<int>(into[v].size());
  std::vector<RatMatrix> maps;
  for (std::size_t k = 0; k < q->arrows().size(); ++k) {
    const Arrow& e = q->arrow(k);
    RatMatrix m(into[e.target].size(), into[e.source].size());
    for (std::size_t c = 0; c < into[e.source].size(); ++c) {
      const Path& p = into[e.source][c];
      if (p.arrows.empty() || p.arrows.front() != k) continue;
      std::vector<std::size_t> rest(p.arrows.begin() + 1, p.arrows.end());
      for (std::size_t r = 0; r < into[e.target].size(); ++r)
        if (into[e.target][r].arrows == rest) m(r, c) = 1;
    }
    maps.push_back(std::move(m));
  }
  return Rep(q, std::move(d), std::move(maps));
}

inline Rep simple(const QuiverPtr& q, std::size_t a) {
  DimVec d(q->vertex_count());
  d[a] = 1;
  std::vector<RatMatrix> maps;
  for (const auto& e : q->arrows()) maps.emplace_back(static_cast<std::size_t>(d[e.target]), static_cast<std::size_t>(d[e.source]));
  return Rep(q, std::move(d), std::move(maps));
}

struct CanonicalModules {
  std::vector<Rep> projectives;
  std::vector<Rep> injectives;
  std::vector<Rep> simples;
};

inline CanonicalModules canonical_modules(const QuiverPtr& q) {
  CanonicalModules c;
  for (std::size_t a = 0; a < q->vertex_count(); ++a) {
    c.projectives.push_back(projective(q, a));
    c.injectives.push_back(injective(q, a));
    c.simples.push_back(simple(q, a));
  }
  return c;
}

// The matrix of a path p acting on M.
inline RatMatrix path_action(const Rep& m, const Path& p) {
  RatMatrix acc = RatMatrix::identity(m.dim(p.start));
  for (std::size_t e : p.arrows) acc = m.map(e) * acc;
  return acc;
}

// The morphism P_a -> M sending the trivial path at a to x in M_a.
inline Intertwiner map_from_projective(const Rep& pa, std::size_t a, const Rep& m, const RatVector& x) {
  const Quiver& q = m.quiver();
  const auto by = paths_by_end(q, a);
  Intertwiner f;
  for (std::size_t v = 0; v < q.vertex_count(); ++v) {
    RatMatrix fv(m.dim(v), pa.dim(v));
    for (std::size_t c = 0; c < by[v].size(); ++c) {
      const RatVector img = path_action(m, by[v][c]) * x;
      for (std::size_t r = 0; r < m.dim(v); ++r) fv(r, c) = img[r];
    }
    f.push_back(std::move(fv));
  }
  return f;
}

// ---------------------------------------------------------------------------
// Direct sums, kernels, cokernels

inline Rep direct_sum(const std::vector<Rep>& parts, const QuiverPtr& q) {
  DimVec d(q->vertex_count());
  for (const auto& p : parts) d = d + p.dims();
  std::vector<RatMatrix> maps;
  for (std::size_t k = 0; k < q->arrows().size(); ++k) {
    std::vector<RatMatrix> blocks;
    for (const auto& p : parts) blocks.push_back(p.map(k));
    maps.push_back(block_diagonal(blocks));
  }
  return Rep(q, std::move(d), std::move(maps));
}

// The map X -> (+) E_l with components f_l, stacked vertically.
inline Intertwiner stack_into(const std::vector<Intertwiner>& components, const Rep& source, const std::vector<Rep>& targets) {
  Intertwiner f;
  for (std::size_t v = 0; v < source.quiver().vertex_count(); ++v) {
    std::vector<RatMatrix> rows;
    for (std::size_t l = 0; l < components.size(); ++l) rows.push_back(components[l][v]);
    if (rows.empty()) {
      f.emplace_back(0, source.dim(v));
      continue;
    }
    f.push_back(vstack(rows, source.dim(v)));
  }
  (void)targets;
  return f;
}

// The map (+) E_l -> Y with components g_l, side by side.
inline Intertwiner join_from(const std::vector<Intertwiner>& components, const std::vector<Rep>& sources, const Rep& target) {
  Intertwiner f;
  for (std::size_t v = 0; v < target.quiver().vertex_count(); ++v) {
    std::vector<RatMatrix> cols;
    for (std::size_t l = 0; l < components.size(); ++l) cols.push_back(components[l][v]);
    if (cols.empty()) {
      f.emplace_back(target.dim(v), 0);
      continue;
    }
    f.push_back(hstack(cols, target.dim(v)));
  }
  (void)sources;
  return f;
}

struct RepKernel {
  Rep module;
  Intertwiner inclusion;
};

struct RepCokernel {
  Rep module;
  Intertwiner projection;
  Intertwiner section;  // vertexwise linear right inverse of the projection (not a morphism)
};

inline RepKernel kernel(const Rep& m, const Intertwiner& f) {
  const Quiver& q = m.quiver();
  std::vector<KernelMatrix> ks;
  DimVec d(q.vertex_count());
  for (std::size_t v = 0; v < q.vertex_count(); ++v) {
    ks.push_back(kernel_matrix(f[v]));
    d[v] = static_cast<int>(ks.back().basis.cols());
  }
  std::vector<RatMatrix> maps;
  for (std::size_t k = 0; k < q.arrows().size(); ++k) {
    const Arrow& a = q.arrow(k);
    maps.push_back(ks[a.target].left_inverse_apply(m.map(k) * ks[a.source].basis));
  }
  RepKernel out{Rep(m.quiver_ptr(), std::move(d), std::move(maps)), {}};
  for (auto& k : ks) out.inclusion.push_back(k.basis);
  return out;
}

inline RepCokernel cokernel(const Rep& n, const Intertwiner& f) {
  const Quiver& q = n.quiver();
  std::vector<Quotient> qs;
  DimVec d(q.vertex_count());
  for (std::size_t v = 0; v < q.vertex_count(); ++v) {
    qs.push_back(quotient_by(f[v]));
    d[v] = static_cast<int>(qs.back().kept.size());
  }
  std::vector<RatMatrix> maps;
  for (std::size_t k = 0; k < q.arrows().size(); ++k) {
    const Arrow& a = q.arrow(k);
    maps.push_back(qs[a.target].projection * n.map(k) * qs[a.source].section);
  }
  RepCokernel out{Rep(n.quiver_ptr(), std::move(d), std::move(maps)), {}, {}};
  for (auto& x : qs) {
    out.projection.push_back(x.projection);
    out.section.push_back(x.section);
  }
  return out;
}

inline bool is_mono(const Intertwiner& f) {
  return std::all_of(f.begin(), f.end(), [](const RatMatrix& m) { return rank(m) == m.cols(); });
}
inline bool is_epi(const Intertwiner& f) {
  return std::all_of(f.begin(), f.end(), [](const RatMatrix& m) { return rank(m) == m.rows(); });
}
inline bool is_iso(const Intertwiner& f) {
  return std::all_of(f.begin(), f.end(), [](const RatMatrix& m) { return is_invertible(m); });
}

// Deterministic probe of a Hom space for an invertible element: every basis
// element, then a handful of fixed integer combinations.
template <class Morphism, class Combine, class IsIso>
inline bool hom_contains_iso(const std::vector<Morphism>& basis, Combine combine, IsIso iso) {
  for (const auto& b : basis)
    if (iso(b)) return true;
  for (long seed = 2; seed <= 9 && basis.size() > 1; ++seed) {
    RatVector c(basis.size());
    long x = 1;
    for (auto& ck : c) {
      ck = x;
      x = (x * seed) % 97 + 1;
    }
    if (iso(combine(c))) return true;
  }
  return false;
}

inline bool is_isomorphic(const Rep& m, const Rep& n) {
  if (!(m.quiver() == n.quiver()) || m.dims() != n.dims()) return false;
  if (m.is_zero()) return true;
  const auto basis = hom_basis(m, n);
  return hom_contains_iso(
      basis, [&](const RatVector& c) { return linear_combination(basis, c, m, n); },
      [](const Intertwiner& f) { return is_iso(f); });
}

// ---------------------------------------------------------------------------
// Reflection functors

// S+ at a sink v: the space at v becomes the kernel of (+)_{a: i->v} M_i -> M_v.
inline Rep reflect_at_sink(const Rep& m, std::size_t v) {
  const Quiver& q = m.quiver();
  if (!q.is_sink(v)) throw InputError("reflect: vertex " + std::to_string(q.label(v)) + " is not a sink");
  const auto in = q.incoming(v);
  std::vector<RatMatrix> parts;
  for (auto k : in) parts.push_back(m.map(k));
  const RatMatrix h = parts.empty() ? RatMatrix(m.dim(v), 0) : hstack(parts, m.dim(v));
  const KernelMatrix ker = kernel_matrix(h);
  auto rq = share(q.reversed_at(v));
  DimVec d = m.dims();
  d[v] = static_cast<int>(ker.basis.cols());
  std::vector<RatMatrix> maps = m.maps();
  std::size_t row = 0;
  for (auto k : in) {
    const std::size_t src = q.arrow(k).source;
    maps[k] = ker.basis.block(row, 0, m.dim(src), ker.basis.cols());
    row += m.dim(src);
  }
  return Rep(rq, std::move(d), std::move(maps));
}

// S- at a source v: the space at v becomes the cokernel of M_v -> (+)_{a: v->j} M_j.
inline Rep reflect_at_source(const Rep& m, std::size_t v) {
  const Quiver& q = m.quiver();
  if (!q.is_source(v)) throw InputError("reflect: vertex " + std::to_string(q.label(v)) + " is not a source");
  const auto out = q.outgoing(v);
  std::vector<RatMatrix> parts;
  for (auto k : out) parts.push_back(m.map(k));
  const RatMatrix h = parts.empty() ? RatMatrix(0, m.dim(v)) : vstack(parts, m.dim(v));
  const Quotient quo = quotient_by(h);
  auto rq = share(q.reversed_at(v));
  DimVec d = m.dims();
  d[v] = static_cast<int>(quo.kept.size());
  std::vector<RatMatrix> maps = m.maps();
  std::size_t col = 0;
  for (auto k : out) {
    const std::size_t tgt = q.arrow(k).target;
    maps[k] = quo.projection.block(0, col, quo.kept.size(), m.dim(tgt));
    col += m.dim(tgt);
  }
  return Rep(rq, std::move(d), std::move(maps));
}

// Reflection at v: S+ when v is a sink, S- when v is a source.
inline Rep reflect(const Rep& m, std::size_t v) {
  if (m.quiver().is_sink(v)) return reflect_at_sink(m, v);
  if (m.quiver().is_source(v)) return reflect_at_source(m, v);
  throw InputError("reflect: vertex " + std::to_string(m.quiver().label(v)) + " is neither a sink nor a source");
}

// Re-attach a representation to the original quiver object once a full
// Coxeter sequence has restored every arrow.
inline Rep rebase(const Rep& m, const QuiverPtr& q) {
  if (!(m.quiver() == *q)) throw EngineError("rebase: quiver mismatch after reflection sequence");
  return Rep(q, m.dims(), m.maps());
}

inline Rep coxeter_minus(const Rep& m) {
  Rep cur = m;
  for (std::size_t v : m.quiver().topological_order()) cur = reflect_at_source(cur, v);
  return rebase(cur, m.quiver_ptr());
}

inline Rep coxeter_plus(const Rep& m) {
  auto order = m.quiver().topological_order();
  std::reverse(order.begin(), order.end());
  Rep cur = m;
  for (std::size_t v : order) cur = reflect_at_sink(cur, v);
  return rebase(cur, m.quiver_ptr());
}

enum class TauDirection { Forward, Inverse };

// Auslander-Reiten translate of an indecomposable via the Coxeter functors;
// the zero module comes back for projectives (forward) and injectives (inverse).
inline Rep tau(const Rep& m, TauDirection dir) {
  if (m.is_zero()) return m;
  if (hom_dim(m, m) != 1) throw InputError("tau: input is not an exceptional indecomposable (dim End != 1)");
  return dir == TauDirection::Forward ? coxeter_plus(m) : coxeter_minus(m);
}

// Dimension-vector reflection s_v.
inline DimVec reflect_dims(const Quiver& q, const DimVec& d, std::size_t v) {
  DimVec r = d;
  int s = -d[v];
  for (const auto& a : q.arrows()) {
    if (a.source == v) s += d[a.target];
    if (a.target == v) s += d[a.source];
  }
  r[v] = s;
  return r;
}

// ---------------------------------------------------------------------------
// Indecomposables

struct IndecId {
  enum class Kind { Root, Preprojective, Preinjective };
  Kind kind = Kind::Root;
  DimVec dims;
  int index = 0;  // tau-orbit index for the Kronecker families

  std::string label() const { return dims.str(); }
  std::string tag() const {
    switch (kind) {
      case Kind::Root: return dims.str();
      case Kind::Preprojective: return "P" + std::to_string(index);
      case Kind::Preinjective: return "I" + std::to_string(index);
    }
    return dims.str();
  }
  friend bool operator==(const IndecId& a, const IndecId& b) { return a.kind == b.kind && a.dims == b.dims && a.index == b.index; }
};

struct Indecomposable {
  IndecId id;
  Rep rep;
};

inline bool is_dynkin_quiver(const Quiver& q) {
  for (const auto& comp : q.connected_components())
    if (classify(q.induced(comp)).family != DiagramFamily::Dynkin) return false;
  return true;
}

// One representative per positive root, obtained as tau^{-r} P_a. Sorted by
// (total dimension, lexicographic dimension vector).
inline std::vector<Indecomposable> indecomposables(const QuiverPtr& q) {
  if (!is_dynkin_quiver(*q)) throw InputError("indecomposables: every component must be Dynkin (use kronecker_window for ~A1)");
  std::vector<Indecomposable> out;
  for (std::size_t a = 0; a < q->vertex_count(); ++a) {
    Rep x = projective(q, a);
    std::size_t guard = 0;
    while (!x.is_zero()) {
      if (++guard > 64) throw EngineError("indecomposables: tau-orbit did not terminate");
      out.push_back({{IndecId::Kind::Root, x.dims(), 0}, x});
      x = coxeter_minus(x);
    }
  }
  std::sort(out.begin(), out.end(), [](const Indecomposable& a, const Indecomposable& b) { return canonical_less(a.id.dims, b.id.dims); });
  for (std::size_t k = 0; k + 1 < out.size(); ++k)
    if (out[k].id.dims == out[k + 1].id.dims) throw EngineError("indecomposables: two modules share dimension vector " + out[k].id.label());
  for (const auto& m : out)
    if (hom_dim(m.rep, m.rep) != 1) throw EngineError("indecomposables: dim End != 1 for " + m.id.label());
  return out;
}

// Preprojectives P(0..w) with dims (k, k+1) and preinjectives I(0..w) with
// dims (k+1, k), written as (source, sink). Regular modules are excluded.
inline std::vector<Indecomposable> kronecker_window(const QuiverPtr& q, int w) {
  if (w < 0) throw InputError("kronecker_window: negative window");
  const DiagramClass c = classify(*q);
  if (!(c.family == DiagramFamily::Euclidean && c.series == 'A' && c.rank == 1))
    throw InputError("kronecker_window: quiver is not the Kronecker quiver");
  const std::size_t src = q->is_source(0) ? 0 : 1;
  const std::size_t snk = 1 - src;
  auto dims_of = [&](int at_src, int at_snk) {
    DimVec d(2);
    d[src] = at_src;
    d[snk] = at_snk;
    return d;
  };
  std::vector<Rep> pre{projective(q, snk), projective(q, src)};
  std::vector<Rep> inj{injective(q, src), injective(q, snk)};
  while (static_cast<int>(pre.size()) <= w) pre.push_back(coxeter_minus(pre[pre.size() - 2]));
  while (static_cast<int>(inj.size()) <= w) inj.push_back(coxeter_plus(inj[inj.size() - 2]));
  std::vector<Indecomposable> out;
  for (int k = 0; k <= w; ++k) {
    if (pre[k].dims() != dims_of(k, k + 1)) throw EngineError("kronecker_window: unexpected preprojective dimension");
    out.push_back({{IndecId::Kind::Preprojective, pre[k].dims(), k}, pre[k]});
  }
  for (int k = 0; k <= w; ++k) {
    if (inj[k].dims() != dims_of(k + 1, k)) throw EngineError("kronecker_window: unexpected preinjective dimension");
    out.push_back({{IndecId::Kind::Preinjective, inj[k].dims(), k}, inj[k]});
  }
  for (const auto& m : out)
    if (hom_dim(m.rep, m.rep) != 1) throw EngineError("kronecker_window: dim End != 1 for " + m.id.tag());
  return out;
}

inline std::vector<Indecomposable> kronecker_window(int w) { return kronecker_window(share(kronecker_quiver()), w); }

// Extension by zero of a module over a full subquiver.
inline Rep extend_by_zero(const Rep& m, const QuiverPtr& ambient) {
  const Quiver& sub = m.quiver();
  DimVec d(ambient->vertex_count());
  std::vector<std::size_t> pos(sub.vertex_count());
  for (std::size_t v = 0; v < sub.vertex_count(); ++v) {
    pos[v] = ambient->index_of(sub.label(v));
    d[pos[v]] = m.dims()[v];
  }
  std::vector<RatMatrix> maps;
  for (const auto& a : ambient->arrows()) {
    RatMatrix mat(static_cast<std::size_t>(d[a.target]), static_cast<std::size_t>(d[a.source]));
    for (std::size_t k = 0; k < sub.arrows().size(); ++k)
      if (sub.arrow(k).id == a.id) mat = m.map(k);
    maps.push_back(std::move(mat));
  }
  return Rep(ambient, std::move(d), std::move(maps));
}

}  // namespace tiltq
