#pragma once

// Minimal add(pool)-approximations and exchange sequences, written once over a
// category interface so the hereditary and the duplicated engines share them.
//
// An Ops value provides:
//   Module, Morphism
//   hom(a, b) -> vector<Morphism>                 basis of Hom(a, b)
//   compose(g, f) -> Morphism                     g after f
//   identity(a) -> Morphism
//   flatten(f) -> RatVector
//   combine(basis, coeff, a, b) -> Morphism
//   direct_sum(parts, like) -> Module
//   into_sum(components, source, targets) -> Morphism
//   from_sum(components, sources, target) -> Morphism
//   cokernel(target, f) -> {module, projection}
//   kernel(source, f) -> {module, inclusion}
//   is_mono(f), is_epi(f), is_iso(f), is_zero(module), total_dim(module)

#include "tiltq/errors.hpp"
#include "tiltq/exactlin.hpp"
#include "tiltq/rep.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace tiltq {

template <class Ops>
struct Approximation {
  typename Ops::Module module;          // the add(pool) object
  typename Ops::Morphism map;           // x -> module (left) or module -> x (right)
  std::vector<std::size_t> summands;    // pool indices, with multiplicity
};

namespace detail {

template <class Ops>
class HomCache {
 public:
  using Module = typename Ops::Module;
  using Morphism = typename Ops::Morphism;
  HomCache(const Ops& ops, const std::vector<Module>& pool) : ops_(ops), pool_(pool) {}
  const std::vector<Morphism>& get(std::size_t a, std::size_t b) {
    auto key = std::make_pair(a, b);
    auto it = cache_.find(key);
    if (it == cache_.end()) it = cache_.emplace(key, ops_.hom(pool_[a], pool_[b])).first;
    return it->second;
  }

 private:
  const Ops& ops_;
  const std::vector<Module>& pool_;
  std::map<std::pair<std::size_t, std::size_t>, std::vector<Morphism>> cache_;
};

inline std::size_t span_rank(const std::vector<RatVector>& vs) {
  if (vs.empty()) return 0;
  return rank(RatMatrix::from_columns(vs.front().size(), vs));
}

}  // namespace detail

// Minimal left add(pool)-approximation of x: start from a basis of every
// Hom(x, pool_j) and drop maps greedily while the remaining ones still
// generate every Hom(x, pool_j) under postcomposition.
template <class Ops>
Approximation<Ops> minimal_left_approximation(const Ops& ops, const typename Ops::Module& x, const std::vector<typename Ops::Module>& pool) {
  using Morphism = typename Ops::Morphism;
  detail::HomCache<Ops> cache(ops, pool);
  std::vector<std::vector<Morphism>> hx(pool.size());
  struct Cand {
    std::size_t pool;
    Morphism map;
  };
  std::vector<Cand> cands;
  for (std::size_t j = 0; j < pool.size(); ++j) {
    hx[j] = ops.hom(x, pool[j]);
    for (const auto& g : hx[j]) cands.push_back({j, g});
  }
  auto generates = [&](const std::vector<bool>& keep) {
    for (std::size_t j = 0; j < pool.size(); ++j) {
      if (hx[j].empty()) continue;
      std::vector<RatVector> span;
      for (std::size_t c = 0; c < cands.size(); ++c) {
        if (!keep[c]) continue;
        for (const auto& psi : cache.get(cands[c].pool, j)) span.push_back(ops.flatten(ops.compose(psi, cands[c].map)));
      }
      if (detail::span_rank(span) < hx[j].size()) return false;
    }
    return true;
  };
  std::vector<bool> keep(cands.size(), true);
  for (std::size_t c = cands.size(); c-- > 0;) {
    keep[c] = false;
    if (!generates(keep)) keep[c] = true;
  }
  Approximation<Ops> out;
  std::vector<typename Ops::Module> targets;
  std::vector<Morphism> comps;
  for (std::size_t c = 0; c < cands.size(); ++c) {
    if (!keep[c]) continue;
    out.summands.push_back(cands[c].pool);
    targets.push_back(pool[cands[c].pool]);
    comps.push_back(cands[c].map);
  }
  out.module = ops.direct_sum(targets, x);
  out.map = ops.into_sum(comps, x, targets);
  return out;
}

// Minimal right add(pool)-approximation of x, dual to the above.
template <class Ops>
Approximation<Ops> minimal_right_approximation(const Ops& ops, const typename Ops::Module& x, const std::vector<typename Ops::Module>& pool) {
  using Morphism = typename Ops::Morphism;
  detail::HomCache<Ops> cache(ops, pool);
  std::vector<std::vector<Morphism>> hx(pool.size());
  struct Cand {
    std::size_t pool;
    Morphism map;
  };
  std::vector<Cand> cands;
  for (std::size_t j = 0; j < pool.size(); ++j) {
    hx[j] = ops.hom(pool[j], x);
    for (const auto& g : hx[j]) cands.push_back({j, g});
  }
  auto generates = [&](const std::vector<bool>& keep) {
    for (std::size_t j = 0; j < pool.size(); ++j) {
      if (hx[j].empty()) continue;
      std::vector<RatVector> span;
      for (std::size_t c = 0; c < cands.size(); ++c) {
        if (!keep[c]) continue;
        for (const auto& psi : cache.get(j, cands[c].pool)) span.push_back(ops.flatten(ops.compose(cands[c].map, psi)));
      }
      if (detail::span_rank(span) < hx[j].size()) return false;
    }
    return true;
  };
  std::vector<bool> keep(cands.size(), true);
  for (std::size_t c = cands.size(); c-- > 0;) {
    keep[c] = false;
    if (!generates(keep)) keep[c] = true;
  }
  Approximation<Ops> out;
  std::vector<typename Ops::Module> sources;
  std::vector<Morphism> comps;
  for (std::size_t c = 0; c < cands.size(); ++c) {
    if (!keep[c]) continue;
    out.summands.push_back(cands[c].pool);
    sources.push_back(pool[cands[c].pool]);
    comps.push_back(cands[c].map);
  }
  out.module = ops.direct_sum(sources, x);
  out.map = ops.from_sum(comps, sources, x);
  return out;
}

template <class Ops>
bool ops_isomorphic(const Ops& ops, const typename Ops::Module& a, const typename Ops::Module& b) {
  if (ops.total_dim(a) != ops.total_dim(b)) return false;
  if (ops.is_zero(a)) return true;
  const auto basis = ops.hom(a, b);
  return hom_contains_iso(
      basis, [&](const RatVector& c) { return ops.combine(basis, c, a, b); },
      [&](const typename Ops::Morphism& f) { return ops.is_iso(f); });
}

template <class Ops>
struct ExchangeSequence {
  Approximation<Ops> middle;     // x -> E
  typename Ops::Module cokernel; // E -> y
  typename Ops::Morphism projection;
};

// 0 -> x -> E -> y -> 0 with x -> E the minimal left add(shared)-approximation.
// Absent when the approximation is zero or not injective.
template <class Ops>
std::optional<ExchangeSequence<Ops>> exchange_sequence(const Ops& ops, const typename Ops::Module& x, const std::vector<typename Ops::Module>& shared) {
  auto approx = minimal_left_approximation(ops, x, shared);
  if (approx.summands.empty() || !ops.is_mono(approx.map)) return std::nullopt;
  auto cok = ops.cokernel(approx.module, approx.map);
  if (ops.total_dim(approx.module) != ops.total_dim(x) + ops.total_dim(cok.module))
    throw EngineError("exchange_sequence: dimensions do not add up");
  if (ops.hom(cok.module, cok.module).size() != 1) throw InputError("exchange_sequence: cokernel is decomposable");
  return ExchangeSequence<Ops>{std::move(approx), cok.module, cok.projection};
}

// Category interface for representations of the base quiver.
struct RepOps {
  using Module = Rep;
  using Morphism = Intertwiner;
  struct Cok {
    Rep module;
    Intertwiner projection;
  };
  struct Ker {
    Rep module;
    Intertwiner inclusion;
  };
  std::vector<Morphism> hom(const Rep& a, const Rep& b) const { return hom_basis(a, b); }
  Morphism compose(const Morphism& g, const Morphism& f) const { return tiltq::compose(g, f); }
  RatVector flatten(const Morphism& f) const { return tiltq::flatten(f); }
  Morphism identity(const Rep& m) const { return identity_map(m); }
  Morphism combine(const std::vector<Morphism>& basis, const RatVector& c, const Rep& a, const Rep& b) const {
    return linear_combination(basis, c, a, b);
  }
  Rep direct_sum(const std::vector<Rep>& parts, const Rep& like) const { return tiltq::direct_sum(parts, like.quiver_ptr()); }
  Morphism into_sum(const std::vector<Morphism>& comps, const Rep& source, const std::vector<Rep>& targets) const {
    return stack_into(comps, source, targets);
  }
  Morphism from_sum(const std::vector<Morphism>& comps, const std::vector<Rep>& sources, const Rep& target) const {
    return join_from(comps, sources, target);
  }
  Cok cokernel(const Rep& target, const Morphism& f) const {
    auto c = tiltq::cokernel(target, f);
    return {std::move(c.module), std::move(c.projection)};
  }
  Ker kernel(const Rep& source, const Morphism& f) const {
    auto k = tiltq::kernel(source, f);
    return {std::move(k.module), std::move(k.inclusion)};
  }
  bool is_mono(const Morphism& f) const { return tiltq::is_mono(f); }
  bool is_epi(const Morphism& f) const { return tiltq::is_epi(f); }
  bool is_iso(const Morphism& f) const { return tiltq::is_iso(f); }
  bool is_zero(const Rep& m) const { return m.is_zero(); }
  int total_dim(const Rep& m) const { return m.total_dim(); }
};

}  // namespace tiltq
