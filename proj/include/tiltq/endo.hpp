#pragma once

// Endomorphism algebras B = End(T)^op of a basic module T = T_1 (+) ... (+) T_r
// as structure constants, left B-modules Hom(T, M), minimal projective
// resolutions and global dimension.
//
// Basis elements are the hom-space bases Hom(T_s, T_t), with the identity of
// End(T_i) as the idempotent e_i. The product is x . y = y o x, so that
// Hom(T, M) is a left module under b . f = f o b and Be_i = Hom(T, T_i).

#include "tiltq/errors.hpp"
#include "tiltq/exactlin.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace tiltq {

struct StructureAlgebra {
  std::size_t summands = 0;
  std::vector<std::pair<std::size_t, std::size_t>> tags;  // (source, target) summand per basis element
  std::vector<std::vector<RatVector>> mult;                // mult[x][y] = coordinates of x . y
  std::vector<std::size_t> idempotents;                    // basis index of e_i

  std::size_t dim() const { return tags.size(); }
  bool in_radical(std::size_t x) const { return tags[x].first != tags[x].second; }

  RatVector product(const RatVector& a, const RatVector& b) const {
    RatVector out(dim());
    for (std::size_t x = 0; x < dim(); ++x) {
      if (a[x] == 0) continue;
      for (std::size_t y = 0; y < dim(); ++y) {
        if (b[y] == 0) continue;
        const auto& c = mult[x][y];
        for (std::size_t z = 0; z < dim(); ++z)
          if (c[z] != 0) out[z] += a[x] * b[y] * c[z];
      }
    }
    return out;
  }

  RatVector unit() const {
    RatVector u(dim());
    for (auto e : idempotents) u[e] = 1;
    return u;
  }

  RatVector basis_vector(std::size_t x) const {
    RatVector v(dim());
    v[x] = 1;
    return v;
  }
};

// Associativity on basis triples and the two-sided unit; empty when both hold.
inline std::vector<std::string> algebra_issues(const StructureAlgebra& b) {
  std::vector<std::string> out;
  const auto u = b.unit();
  for (std::size_t x = 0; x < b.dim(); ++x) {
    const auto v = b.basis_vector(x);
    if (b.product(u, v) != v || b.product(v, u) != v) out.push_back("unit fails at basis element " + std::to_string(x));
    for (std::size_t y = 0; y < b.dim(); ++y)
      for (std::size_t z = 0; z < b.dim(); ++z)
        if (b.product(b.mult[x][y], b.basis_vector(z)) != b.product(v, b.mult[y][z]))
          out.push_back("associativity fails at (" + std::to_string(x) + "," + std::to_string(y) + "," + std::to_string(z) + ")");
  }
  return out;
}

// Coordinates of flattened vectors in a fixed spanning basis.
class Coordinates {
 public:
  explicit Coordinates(const std::vector<RatVector>& basis, std::size_t len) : basis_(RatMatrix::from_columns(len, basis)) {}
  RatVector operator()(const RatVector& v) const {
    auto c = solve(basis_, v);
    if (!c) throw EngineError("coordinates: vector outside the span");
    return *c;
  }

 private:
  RatMatrix basis_;
};

template <class Ops>
StructureAlgebra endo_algebra(const Ops& ops, const std::vector<typename Ops::Module>& t) {
  using Morphism = typename Ops::Morphism;
  const std::size_t r = t.size();
  std::vector<std::vector<std::vector<Morphism>>> hom(r, std::vector<std::vector<Morphism>>(r));
  for (std::size_t s = 0; s < r; ++s)
    for (std::size_t u = 0; u < r; ++u) hom[s][u] = ops.hom(t[s], t[u]);
  StructureAlgebra b;
  b.summands = r;
  std::vector<std::vector<std::size_t>> offset(r, std::vector<std::size_t>(r));
  std::vector<Morphism> basis;
  for (std::size_t s = 0; s < r; ++s)
    for (std::size_t u = 0; u < r; ++u) {
      offset[s][u] = basis.size();
      if (s == u) {
        if (hom[s][s].size() != 1) throw InputError("endo_algebra: summand " + std::to_string(s) + " has End of dimension " + std::to_string(hom[s][s].size()));
        hom[s][s] = {ops.identity(t[s])};
        b.idempotents.push_back(basis.size());
      }
      for (const auto& f : hom[s][u]) {
        basis.push_back(f);
        b.tags.emplace_back(s, u);
      }
    }
  std::vector<std::vector<std::optional<Coordinates>>> coord(r, std::vector<std::optional<Coordinates>>(r));
  auto coords = [&](std::size_t s, std::size_t u, const Morphism& f) {
    if (!coord[s][u]) {
      std::vector<RatVector> flat;
      for (const auto& g : hom[s][u]) flat.push_back(ops.flatten(g));
      coord[s][u].emplace(flat, ops.flatten(f).size());
    }
    return (*coord[s][u])(ops.flatten(f));
  };
  const std::size_t d = basis.size();
  b.mult.assign(d, std::vector<RatVector>(d, RatVector(d)));
  for (std::size_t x = 0; x < d; ++x)
    for (std::size_t y = 0; y < d; ++y) {
      const auto [xs, xt] = b.tags[x];
      const auto [ys, yt] = b.tags[y];
      if (xt != ys) continue;
      const Morphism f = ops.compose(basis[y], basis[x]);
      if (hom[xs][yt].empty()) continue;
      const auto c = coords(xs, yt, f);
      for (std::size_t k = 0; k < c.size(); ++k) b.mult[x][y][offset[xs][yt] + k] = c[k];
    }
  return b;
}

// A left module: one action matrix per basis element.
struct BModule {
  std::size_t dim = 0;
  std::vector<RatMatrix> action;

  bool is_zero() const { return dim == 0; }
  RatMatrix act(const StructureAlgebra& b, const RatVector& a) const {
    RatMatrix m(dim, dim);
    for (std::size_t x = 0; x < b.dim(); ++x)
      if (a[x] != 0) m = m + a[x] * action[x];
    return m;
  }
};

// Action respects the multiplication table and the unit acts as identity.
inline std::vector<std::string> module_issues(const StructureAlgebra& b, const BModule& m) {
  std::vector<std::string> out;
  if (!(m.act(b, b.unit()) == RatMatrix::identity(m.dim))) out.push_back("unit does not act as identity");
  for (std::size_t x = 0; x < b.dim(); ++x)
    for (std::size_t y = 0; y < b.dim(); ++y)
      if (!(m.act(b, b.mult[x][y]) == m.action[x] * m.action[y]))
        out.push_back("action fails at (" + std::to_string(x) + "," + std::to_string(y) + ")");
  return out;
}

inline BModule indecomposable_projective(const StructureAlgebra& b, std::size_t i) {
  std::vector<std::size_t> idx;
  for (std::size_t y = 0; y < b.dim(); ++y)
    if (b.tags[y].second == i) idx.push_back(y);
  BModule p;
  p.dim = idx.size();
  for (std::size_t x = 0; x < b.dim(); ++x) {
    RatMatrix a(p.dim, p.dim);
    for (std::size_t c = 0; c < idx.size(); ++c)
      for (std::size_t r = 0; r < idx.size(); ++r) a(r, c) = b.mult[x][idx[c]][idx[r]];
    p.action.push_back(std::move(a));
  }
  return p;
}

inline BModule simple_module(const StructureAlgebra& b, std::size_t i) {
  BModule s;
  s.dim = 1;
  for (std::size_t x = 0; x < b.dim(); ++x) {
    RatMatrix a(1, 1);
    if (x == b.idempotents[i]) a(0, 0) = 1;
    s.action.push_back(a);
  }
  return s;
}

// Hom(T, M) under precomposition. Requires M generated by T.
template <class Ops>
BModule b_module(const Ops& ops, const StructureAlgebra& b, const std::vector<typename Ops::Module>& t, const typename Ops::Module& m) {
  using Morphism = typename Ops::Morphism;
  const std::size_t r = t.size();
  std::vector<std::vector<Morphism>> hom(r);
  std::vector<std::size_t> offset(r);
  std::vector<typename Ops::Module> sources;
  std::vector<Morphism> all;
  BModule out;
  for (std::size_t s = 0; s < r; ++s) {
    hom[s] = ops.hom(t[s], m);
    offset[s] = out.dim;
    out.dim += hom[s].size();
    for (const auto& f : hom[s]) {
      sources.push_back(t[s]);
      all.push_back(f);
    }
  }
  if (!ops.is_zero(m) && (all.empty() || !ops.is_epi(ops.from_sum(all, sources, m))))
    throw InputError("b_module: module is not generated by T");
  // basis of B as morphisms, in the algebra's order
  std::vector<Morphism> bbasis;
  for (std::size_t s = 0; s < r; ++s)
    for (std::size_t u = 0; u < r; ++u) {
      if (s == u) {
        bbasis.push_back(ops.identity(t[s]));
        continue;
      }
      for (const auto& g : ops.hom(t[s], t[u])) bbasis.push_back(g);
    }
  if (bbasis.size() != b.dim()) throw EngineError("b_module: algebra and summand list disagree");
  std::vector<std::optional<Coordinates>> coord(r);
  for (std::size_t x = 0; x < b.dim(); ++x) {
    const auto [xs, xt] = b.tags[x];
    RatMatrix a(out.dim, out.dim);
    if (!hom[xs].empty()) {
      if (!coord[xs]) {
        std::vector<RatVector> flat;
        for (const auto& f : hom[xs]) flat.push_back(ops.flatten(f));
        coord[xs].emplace(flat, flat.front().size());
      }
      for (std::size_t k = 0; k < hom[xt].size(); ++k) {
        const auto c = (*coord[xs])(ops.flatten(ops.compose(hom[xt][k], bbasis[x])));
        for (std::size_t i = 0; i < c.size(); ++i) a(offset[xs] + i, offset[xt] + k) = c[i];
      }
    }
    out.action.push_back(std::move(a));
  }
  return out;
}

// Submodule spanned by the columns of `gens` (closed under the action).
inline BModule submodule(const StructureAlgebra& b, const BModule& m, const RatMatrix& basis) {
  BModule out;
  out.dim = basis.cols();
  for (std::size_t x = 0; x < b.dim(); ++x) {
    if (out.dim == 0) {
      out.action.emplace_back(0, 0);
      continue;
    }
    auto a = solve_matrix(basis, m.action[x] * basis);
    if (!a) throw EngineError("submodule: subspace is not closed under the action");
    out.action.push_back(std::move(*a));
  }
  return out;
}

struct BCover {
  BModule module;
  RatMatrix map;                        // module -> target
  std::vector<std::size_t> summands;    // vertex of each Be_i
};

// Projective cover from a basis of the top M / rad M, split by idempotents.
inline BCover projective_cover(const StructureAlgebra& b, const BModule& m) {
  BCover out;
  std::vector<RatMatrix> rad_gens;
  for (std::size_t x = 0; x < b.dim(); ++x)
    if (b.in_radical(x)) rad_gens.push_back(m.action[x]);
  RatMatrix span = rad_gens.empty() ? RatMatrix(m.dim, 0) : hstack(rad_gens, m.dim);
  std::size_t rk = rank(span);
  std::vector<RatMatrix> cols;
  std::vector<BModule> parts;
  for (std::size_t i = 0; i < b.summands; ++i) {
    const RatMatrix& e = m.action[b.idempotents[i]];
    for (std::size_t c = 0; c < e.cols(); ++c) {
      const RatVector v = e.column(c);
      RatMatrix trial = hstack({span, RatMatrix::from_columns(m.dim, {v})}, m.dim);
      const std::size_t tr = rank(trial);
      if (tr == rk) continue;
      span = std::move(trial);
      rk = tr;
      // Be_i -> M, y |-> y . v for the basis elements y with target i
      const BModule p = indecomposable_projective(b, i);
      std::vector<RatVector> images;
      for (std::size_t y = 0; y < b.dim(); ++y)
        if (b.tags[y].second == i) images.push_back(m.action[y] * v);
      cols.push_back(RatMatrix::from_columns(m.dim, images));
      parts.push_back(p);
      out.summands.push_back(i);
    }
  }
  if (rk != m.dim) throw EngineError("projective_cover: top does not generate");
  out.module.dim = 0;
  for (const auto& p : parts) out.module.dim += p.dim;
  for (std::size_t x = 0; x < b.dim(); ++x) {
    std::vector<RatMatrix> blocks;
    for (const auto& p : parts) blocks.push_back(p.action[x]);
    out.module.action.push_back(blocks.empty() ? RatMatrix(0, 0) : block_diagonal(blocks));
  }
  out.map = cols.empty() ? RatMatrix(m.dim, 0) : hstack(cols, m.dim);
  return out;
}

struct Resolution {
  std::vector<BCover> covers;
  std::vector<BModule> syzygies;
  int length = 0;       // pd when complete
  bool complete = true; // false when the cap was hit
};

inline Resolution projective_resolution(const StructureAlgebra& b, const BModule& m, int cap = 6) {
  if (cap < 1) throw InputError("projective_resolution: cap must be at least 1");
  Resolution r;
  if (m.is_zero()) return r;
  BModule cur = m;
  for (int k = 0;; ++k) {
    auto c = projective_cover(b, cur);
    const KernelMatrix ker = kernel_matrix(c.map);
    BModule next = submodule(b, c.module, ker.basis);
    r.covers.push_back(std::move(c));
    r.syzygies.push_back(next);
    if (next.is_zero()) {
      r.length = k;
      return r;
    }
    if (k + 1 >= cap) {
      r.length = cap;
      r.complete = false;
      return r;
    }
    cur = std::move(next);
  }
}

inline int b_projective_dimension(const StructureAlgebra& b, const BModule& m, int cap = 6) {
  const auto r = projective_resolution(b, m, cap);
  if (!r.complete) throw EngineError("projective dimension exceeds the cap of " + std::to_string(cap));
  return r.length;
}

// Projective dimension of each simple, in summand order.
inline std::vector<int> simple_dimensions(const StructureAlgebra& b, int cap = 6) {
  std::vector<int> out;
  for (std::size_t i = 0; i < b.summands; ++i) out.push_back(b_projective_dimension(b, simple_module(b, i), cap));
  return out;
}

inline int global_dimension(const StructureAlgebra& b, int cap = 6) {
  const auto d = simple_dimensions(b, cap);
  return d.empty() ? 0 : *std::max_element(d.begin(), d.end());
}

}  // namespace tiltq
