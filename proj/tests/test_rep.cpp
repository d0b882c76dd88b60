#include "tiltq/rep.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace tiltq;

namespace {

QuiverPtr linear_a(int n) { return share(orient(parse_diagram("A" + std::to_string(n)), 0)); }

// Number of paths i ~> j from powers of the adjacency matrix.
std::vector<std::vector<long>> path_counts(const Quiver& q) {
  const std::size_t n = q.vertex_count();
  std::vector<std::vector<long>> adj(n, std::vector<long>(n, 0)), total(n, std::vector<long>(n, 0)), pw(n, std::vector<long>(n, 0));
  for (const auto& a : q.arrows()) ++adj[a.source][a.target];
  for (std::size_t i = 0; i < n; ++i) pw[i][i] = 1;
  for (std::size_t step = 0; step < n; ++step) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) total[i][j] += pw[i][j];
    std::vector<std::vector<long>> next(n, std::vector<long>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t j = 0; j < n; ++j) next[i][j] += pw[i][k] * adj[k][j];
    pw = next;
  }
  return total;
}

DimVec coxeter_minus_dims(const Quiver& q, DimVec d) {
  Quiver cur = q;
  for (std::size_t v : q.topological_order()) {
    d = reflect_dims(cur, d, v);
    cur = cur.reversed_at(v);
  }
  return d;
}

int tits(const Quiver& q, const DimVec& d) { return euler_form(q, d, d); }

std::size_t positive_roots(char series, int n) {
  if (series == 'A') return static_cast<std::size_t>(n * (n + 1) / 2);
  if (series == 'D') return static_cast<std::size_t>(n * (n - 1));
  return n == 6 ? 36 : n == 7 ? 63 : 120;
}

}  // namespace

TEST(CanonicalModules, DimensionsMatchPathCounts) {
  for (const auto& d : {"A3", "D4", "D5"})
    for (const auto& q0 : orientations(parse_diagram(d))) {
      auto q = share(q0);
      const auto pc = path_counts(*q);
      const auto c = canonical_modules(q);
      for (std::size_t a = 0; a < q->vertex_count(); ++a)
        for (std::size_t b = 0; b < q->vertex_count(); ++b) {
          EXPECT_EQ(c.projectives[a].dims()[b], pc[a][b]);
          EXPECT_EQ(c.injectives[a].dims()[b], pc[b][a]);
          EXPECT_EQ(c.simples[a].dims()[b], a == b ? 1 : 0);
        }
    }
  auto k = share(kronecker_quiver());
  EXPECT_EQ(projective(k, 0).dims(), (DimVec{1, 2}));
  EXPECT_EQ(injective(k, 1).dims(), (DimVec{2, 1}));
}

TEST(CanonicalModules, HomFromProjectiveAndIntoInjective) {
  auto q = share(orient(parse_diagram("D4"), 5));
  const auto c = canonical_modules(q);
  for (const auto& m : indecomposables(q))
    for (std::size_t a = 0; a < q->vertex_count(); ++a) {
      EXPECT_EQ(hom_dim(c.projectives[a], m.rep), m.rep.dim(a));
      EXPECT_EQ(hom_dim(m.rep, c.injectives[a]), m.rep.dim(a));
      EXPECT_EQ(ext1_dim(c.projectives[a], m.rep), 0);
      EXPECT_EQ(ext1_dim(m.rep, c.injectives[a]), 0);
    }
}

TEST(Hom, BasisElementsAreIntertwiners) {
  auto q = share(orient(parse_diagram("A4"), 3));
  const auto ind = indecomposables(q);
  for (const auto& x : ind)
    for (const auto& y : ind) {
      const auto hs = hom_space(x.rep, y.rep);
      for (std::size_t k = 0; k < hs.dim(); ++k) {
        EXPECT_TRUE(is_intertwiner(x.rep, y.rep, hs.basis[k]));
        RatVector e(hs.dim());
        e[k] = 1;
        EXPECT_EQ(hs.coordinates(hs.basis[k]), e);
      }
    }
}

TEST(Hom, MapFromProjectiveIsIntertwiner) {
  auto q = share(kronecker_quiver());
  const auto w = kronecker_window(q, 3);
  const Rep p = projective(q, 0);
  for (const auto& m : w) {
    RatVector x(m.rep.dim(0));
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = static_cast<long>(i + 1);
    EXPECT_TRUE(is_intertwiner(p, m.rep, map_from_projective(p, 0, m.rep, x)));
  }
}

TEST(Ext, EulerRouteMatchesRankRoute) {
  for (const auto& d : {"A3", "D4"})
    for (const auto& q0 : orientations(parse_diagram(d))) {
      const auto ind = indecomposables(share(q0));
      for (const auto& x : ind)
        for (const auto& y : ind) EXPECT_EQ(ext1_dim(x.rep, y.rep), oracle::ext_by_rank(x.rep, y.rep));
    }
}

TEST(Reflect, KroneckerSimpleProjectiveAtSource) {
  auto q = share(kronecker_quiver());
  const Rep p2 = projective(q, 1);
  ASSERT_EQ(p2.dims(), (DimVec{0, 1}));
  const Rep r = reflect(p2, 0);
  EXPECT_EQ(r.dims(), (DimVec{2, 1}));
  EXPECT_TRUE(r.quiver().is_sink(0));
  EXPECT_THROW(reflect_at_sink(p2, 0), InputError);
}

TEST(Reflect, ReflectionDimensionsFollowSimpleReflection) {
  auto q = share(orient(parse_diagram("D5"), 9));
  for (const auto& m : indecomposables(q))
    for (std::size_t v = 0; v < q->vertex_count(); ++v) {
      if (m.rep.dims() == simple(q, v).dims()) continue;
      if (q->is_sink(v) || q->is_source(v)) {
        EXPECT_EQ(reflect(m.rep, v).dims(), reflect_dims(*q, m.rep.dims(), v));
      }
    }
}

TEST(Tau, CoxeterDimensionsAndRoundTrip) {
  for (const auto& q0 : orientations(parse_diagram("A4"))) {
    auto q = share(q0);
    const auto c = canonical_modules(q);
    for (const auto& m : indecomposables(q)) {
      const Rep up = tau(m.rep, TauDirection::Inverse);
      bool inj = false;
      for (const auto& i : c.injectives) inj = inj || is_isomorphic(i, m.rep);
      if (inj) {
        EXPECT_TRUE(up.is_zero());
        continue;
      }
      EXPECT_EQ(up.dims(), coxeter_minus_dims(*q, m.rep.dims()));
      EXPECT_TRUE(is_isomorphic(tau(up, TauDirection::Forward), m.rep));
    }
    for (const auto& p : c.projectives) EXPECT_TRUE(tau(p, TauDirection::Forward).is_zero());
  }
  auto k = share(kronecker_quiver());
  EXPECT_THROW(tau(direct_sum({projective(k, 0), projective(k, 1)}, k), TauDirection::Forward), InputError);
}

TEST(Indecomposables, CountsAndRoots) {
  for (auto [s, n] : std::vector<std::pair<char, int>>{{'A', 1}, {'A', 2}, {'A', 3}, {'A', 4}, {'A', 5}, {'D', 4}, {'D', 5}, {'E', 6}}) {
    auto q = share(orient(dynkin_diagram(s, n), 0));
    const auto ind = indecomposables(q);
    EXPECT_EQ(ind.size(), positive_roots(s, n)) << s << n;
    for (const auto& m : ind) EXPECT_EQ(tits(*q, m.rep.dims()), 1);
    for (std::size_t k = 0; k + 1 < ind.size(); ++k) EXPECT_TRUE(canonical_less(ind[k].id.dims, ind[k + 1].id.dims));
  }
}

TEST(Indecomposables, LinearA3DimensionVectors) {
  const auto ind = indecomposables(linear_a(3));
  std::vector<std::string> got;
  for (const auto& m : ind) got.push_back(m.id.label());
  EXPECT_EQ(got, (std::vector<std::string>{"(0,0,1)", "(0,1,0)", "(1,0,0)", "(0,1,1)", "(1,1,0)", "(1,1,1)"}));
}

TEST(Indecomposables, RejectsNonDynkin) { EXPECT_THROW(indecomposables(share(kronecker_quiver())), InputError); }

TEST(KroneckerWindow, FamiliesAndHomDimensions) {
  const auto w = kronecker_window(5);
  ASSERT_EQ(w.size(), 12u);
  for (int k = 0; k <= 5; ++k) {
    EXPECT_EQ(w[k].id.dims, (DimVec{k, k + 1}));
    EXPECT_EQ(w[6 + k].id.dims, (DimVec{k + 1, k}));
  }
  for (int k = 0; k <= 5; ++k)
    for (int l = 0; l <= 5; ++l) {
      EXPECT_EQ(static_cast<int>(hom_dim(w[k].rep, w[l].rep)), l >= k ? l - k + 1 : 0);
      EXPECT_EQ(ext1_dim(w[k].rep, w[l].rep), l >= k ? 0 : k - l - 1);
      EXPECT_EQ(hom_dim(w[6 + k].rep, w[l].rep), 0u);
      EXPECT_EQ(ext1_dim(w[k].rep, w[6 + l].rep), 0);
    }
  EXPECT_THROW(kronecker_window(-1), InputError);
}

TEST(KernelCokernel, DimensionsAndExactness) {
  auto q = share(orient(parse_diagram("A3"), 2));
  const auto ind = indecomposables(q);
  for (const auto& x : ind)
    for (const auto& y : ind)
      for (const auto& f : hom_basis(x.rep, y.rep)) {
        const auto k = kernel(x.rep, f);
        const auto c = cokernel(y.rep, f);
        EXPECT_TRUE(is_intertwiner(k.module, x.rep, k.inclusion));
        EXPECT_TRUE(is_intertwiner(y.rep, c.module, c.projection));
        EXPECT_TRUE(is_zero_map(compose(f, k.inclusion)));
        EXPECT_TRUE(is_zero_map(compose(c.projection, f)));
        EXPECT_EQ(x.rep.dims() - k.module.dims(), y.rep.dims() - c.module.dims());
      }
}

TEST(Isomorphism, DistinguishesModules) {
  auto q = share(orient(parse_diagram("A3"), 1));
  const auto ind = indecomposables(q);
  for (std::size_t i = 0; i < ind.size(); ++i)
    for (std::size_t j = 0; j < ind.size(); ++j) EXPECT_EQ(is_isomorphic(ind[i].rep, ind[j].rep), i == j);
  const Rep s = direct_sum({ind[0].rep, ind[1].rep}, q);
  const Rep t = direct_sum({ind[1].rep, ind[0].rep}, q);
  EXPECT_TRUE(is_isomorphic(s, t));
}

TEST(ExtendByZero, SubquiverModule) {
  auto q = share(orient(parse_diagram("A3"), 0));
  auto sub = share(delete_vertex(*q, 3));
  const Rep p = projective(sub, 0);
  const Rep e = extend_by_zero(p, q);
  EXPECT_EQ(e.dims(), (DimVec{1, 1, 0}));
  EXPECT_EQ(hom_dim(e, e), 1u);
}
