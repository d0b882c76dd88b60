#pragma once

// Tilting quivers: vertices are sorted lists of pool indices, one arc per
// summand exchange.

#include "tiltq/errors.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <sstream>
#include <tuple>
#include <string>
#include <vector>

namespace tiltq {

struct ExchangeArc {
  std::size_t from = 0;
  std::size_t to = 0;
  std::size_t x = 0;                  // pool index leaving (in `from`)
  std::size_t y = 0;                  // pool index entering (in `to`)
  std::vector<std::size_t> middle;    // pool indices of E in 0 -> X -> E -> Y -> 0
};

struct TiltingGraph {
  std::vector<std::vector<std::size_t>> vertices;
  std::vector<ExchangeArc> arcs;
  std::vector<std::string> pool_labels;

  std::size_t out_degree(std::size_t v) const {
    return static_cast<std::size_t>(std::count_if(arcs.begin(), arcs.end(), [&](const ExchangeArc& a) { return a.from == v; }));
  }
  std::size_t in_degree(std::size_t v) const {
    return static_cast<std::size_t>(std::count_if(arcs.begin(), arcs.end(), [&](const ExchangeArc& a) { return a.to == v; }));
  }
  std::size_t degree(std::size_t v) const { return out_degree(v) + in_degree(v); }

  std::size_t index_of(std::vector<std::size_t> summands) const {
    std::sort(summands.begin(), summands.end());
    for (std::size_t v = 0; v < vertices.size(); ++v)
      if (vertices[v] == summands) return v;
    throw InputError("tilting graph: summand set is not a vertex");
  }

  bool has_arc(std::size_t from, std::size_t to) const {
    return std::any_of(arcs.begin(), arcs.end(), [&](const ExchangeArc& a) { return a.from == from && a.to == to; });
  }

  // Weakly connected components, each sorted, ordered by smallest member.
  std::vector<std::vector<std::size_t>> weak_components() const {
    std::vector<std::size_t> parent(vertices.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t v) {
      while (parent[v] != v) v = parent[v] = parent[parent[v]];
      return v;
    };
    for (const auto& a : arcs) parent[find(a.from)] = find(a.to);
    std::map<std::size_t, std::vector<std::size_t>> groups;
    for (std::size_t v = 0; v < vertices.size(); ++v) groups[find(v)].push_back(v);
    std::vector<std::vector<std::size_t>> out;
    for (auto& [root, members] : groups) out.push_back(std::move(members));
    std::sort(out.begin(), out.end());
    return out;
  }

  bool weakly_connected() const { return weak_components().size() <= 1; }

  std::string vertex_label(std::size_t v) const {
    std::string s;
    for (std::size_t k = 0; k < vertices[v].size(); ++k) s += (k ? "+" : "") + pool_labels[vertices[v][k]];
    return s;
  }

  std::string to_dot() const {
    std::ostringstream os;
    os << "digraph K {\n";
    for (std::size_t v = 0; v < vertices.size(); ++v) os << "  \"" << vertex_label(v) << "\";\n";
    for (const auto& a : arcs) os << "  \"" << vertex_label(a.from) << "\" -> \"" << vertex_label(a.to) << "\";\n";
    os << "}\n";
    return os.str();
  }
};

// Ordered backtracking over the compatibility relation; each result is a
// sorted index list and results come out in lexicographic order.
inline std::vector<std::vector<std::size_t>> enumerate_cliques(const std::vector<std::vector<bool>>& compatible, std::size_t size) {
  const std::size_t n = compatible.size();
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (cur.size() == size) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = start; i < n; ++i) {
      if (!compatible[i][i]) continue;
      bool ok = true;
      for (auto j : cur) ok = ok && compatible[i][j];
      if (!ok) continue;
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

// Almost complete sets shared by exactly two vertices. Returns (vertex a,
// vertex b, summand of a outside the shared part, summand of b outside it).
struct ExchangePair {
  std::size_t a, b, xa, xb;
  std::vector<std::size_t> shared;
};

inline std::vector<ExchangePair> exchange_pairs(const std::vector<std::vector<std::size_t>>& vertices, std::size_t max_complements = 2) {
  std::map<std::vector<std::size_t>, std::vector<std::pair<std::size_t, std::size_t>>> by_shared;
  for (std::size_t v = 0; v < vertices.size(); ++v)
    for (std::size_t k = 0; k < vertices[v].size(); ++k) {
      std::vector<std::size_t> m = vertices[v];
      const std::size_t x = m[k];
      m.erase(m.begin() + static_cast<std::ptrdiff_t>(k));
      by_shared[m].emplace_back(v, x);
    }
  std::vector<ExchangePair> out;
  for (const auto& [m, list] : by_shared) {
    if (list.size() > max_complements) throw EngineError("tilting graph: almost complete set with more than two complements");
    if (list.size() == 2) out.push_back({list[0].first, list[1].first, list[0].second, list[1].second, m});
  }
  std::sort(out.begin(), out.end(), [](const ExchangePair& p, const ExchangePair& q) { return std::tie(p.a, p.b) < std::tie(q.a, q.b); });
  return out;
}

struct SaturationInfo {
  std::size_t s = 0;  // arcs starting at T
  std::size_t e = 0;  // arcs ending at T
  std::size_t sigma = 0;
  bool saturated = false;
  bool dim_criterion = false;
};

}  // namespace tiltq
