#pragma once

// Endomorphism algebras of tilting modules over the duplicated algebra.

#include "tiltq/dup.hpp"
#include "tiltq/endo.hpp"
#include "tiltq/errors.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace tiltq {

// T (+) PBAR for a pool index set: the pool summands first, then the
// projective-injectives in vertex order.
inline std::vector<TripleModule> completed_summands(const DupContext& ctx, const std::vector<std::size_t>& s) {
  std::vector<std::size_t> idx = s;
  for (std::size_t a = 0; a < ctx.rank(); ++a) idx.push_back(ctx.pool().size() + a);
  return ctx.modules(idx);
}

struct GeneratedCheck {
  std::size_t checked = 0;  // pool members in gen T
  std::vector<std::string> violations;
};

// pd_B Hom(T, M) <= pd M for every pool member M generated by T.
inline GeneratedCheck hom_functor_dimension_check(const DupContext& ctx, const std::vector<TripleModule>& t, const StructureAlgebra& b) {
  GeneratedCheck out;
  const auto ops = ctx.ops();
  for (const auto& e : ctx.pool()) {
    BModule h;
    try {
      h = b_module(ops, b, t, e.module);
    } catch (const InputError&) {
      continue;
    }
    ++out.checked;
    const int lhs = b_projective_dimension(b, h), rhs = ctx.pd(e.module);
    if (lhs > rhs) out.violations.push_back(e.label + ": pd_B Hom(T,M) = " + std::to_string(lhs) + " > pd M = " + std::to_string(rhs));
  }
  return out;
}

struct TiltedRow {
  std::vector<std::size_t> set;
  std::string label;
  std::size_t algebra_dim = 0;
  std::vector<int> simple_pd;  // summand order of completed_summands
  int gldim = 0;
  std::size_t generated_checked = 0;
};

struct TiltedReport {
  std::vector<TiltedRow> rows;
  std::map<int, std::size_t> histogram;  // gl.dim -> count
  std::vector<std::string> violations;
  int max_gldim = 0;
  bool ok() const { return violations.empty(); }
};

// For every tilting module T (+) PBAR: gl.dim End(T (+) PBAR) <= 3, simples at
// the summands of T have pd <= 2, and Hom(T, -) does not raise projective
// dimension on generated pool members.
inline TiltedReport verify_tilted_algebras(const DupContext& ctx, const std::vector<std::vector<std::size_t>>& sets, bool algebra_laws = true) {
  if (ctx.rank() > 3) throw InputError("tilted algebra check is limited to rank at most 3");
  TiltedReport r;
  const auto ops = ctx.ops();
  const auto labels = ctx.labels();
  for (const auto& s : sets) {
    TiltedRow row;
    row.set = s;
    for (auto i : s) row.label += (row.label.empty() ? "" : "+") + labels[i];
    const auto t = completed_summands(ctx, s);
    const auto b = endo_algebra(ops, t);
    row.algebra_dim = b.dim();
    if (algebra_laws) {
      const auto bad = algebra_issues(b);
      if (!bad.empty()) r.violations.push_back(row.label + ": " + bad.front());
    }
    row.simple_pd = simple_dimensions(b);
    row.gldim = *std::max_element(row.simple_pd.begin(), row.simple_pd.end());
    if (row.gldim > 3) r.violations.push_back(row.label + ": gl.dim " + std::to_string(row.gldim));
    for (std::size_t k = 0; k < s.size(); ++k)
      if (row.simple_pd[k] > 2)
        r.violations.push_back(row.label + ": simple at " + labels[s[k]] + " has pd " + std::to_string(row.simple_pd[k]));
    const auto g = hom_functor_dimension_check(ctx, t, b);
    row.generated_checked = g.checked;
    for (const auto& v : g.violations) r.violations.push_back(row.label + ": " + v);
    ++r.histogram[row.gldim];
    r.max_gldim = std::max(r.max_gldim, row.gldim);
    r.rows.push_back(std::move(row));
  }
  return r;
}

// gl.dim of the duplicated algebra as End of its regular module: the
// projectives (0, P_a, 0) and (P_a, nu P_a, 1).
inline int regular_endo_global_dimension(const DupContext& ctx) {
  std::vector<TripleModule> t = ctx.projectives().bottom_slots();
  for (const auto& p : ctx.bar_p()) t.push_back(p);
  return global_dimension(endo_algebra(ctx.ops(), t));
}

}  // namespace tiltq
