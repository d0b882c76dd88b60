#pragma once

#include "tiltq/errors.hpp"
#include "tiltq/exactlin.hpp"

#include "json.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace tiltq {

// Dimension vector indexed by vertex position in the ambient quiver.
struct DimVec {
  std::vector<int> values;

  DimVec() = default;
  explicit DimVec(std::size_t n) : values(n, 0) {}
  DimVec(std::initializer_list<int> v) : values(v) {}
  explicit DimVec(std::vector<int> v) : values(std::move(v)) {}

  std::size_t size() const { return values.size(); }
  int operator[](std::size_t i) const { return values[i]; }
  int& operator[](std::size_t i) { return values[i]; }
  int total() const { return std::accumulate(values.begin(), values.end(), 0); }
  bool is_zero() const {
    return std::all_of(values.begin(), values.end(), [](int x) { return x == 0; });
  }
  bool sincere() const {
    return std::all_of(values.begin(), values.end(), [](int x) { return x != 0; });
  }

  friend DimVec operator+(DimVec a, const DimVec& b) {
    if (a.size() != b.size()) throw InputError("dimension vectors over different vertex sets");
    for (std::size_t i = 0; i < a.size(); ++i) a.values[i] += b.values[i];
    return a;
  }
  friend DimVec operator-(DimVec a, const DimVec& b) {
    if (a.size() != b.size()) throw InputError("dimension vectors over different vertex sets");
    for (std::size_t i = 0; i < a.size(); ++i) a.values[i] -= b.values[i];
    return a;
  }
  friend bool operator==(const DimVec&, const DimVec&) = default;
  friend auto operator<=>(const DimVec&, const DimVec&) = default;

  std::string str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < values.size(); ++i) s += (i ? "," : "") + std::to_string(values[i]);
    return s + ")";
  }
};

// Canonical order: total dimension first, then lexicographic.
inline bool canonical_less(const DimVec& a, const DimVec& b) {
  if (a.total() != b.total()) return a.total() < b.total();
  return a.values < b.values;
}

struct Arrow {
  std::string id;
  std::size_t source = 0;  // vertex position
  std::size_t target = 0;
  friend bool operator==(const Arrow&, const Arrow&) = default;
};

struct ArrowSpec {
  std::string id;
  int source;
  int target;
};

class Quiver {
 public:
  Quiver() = default;

  Quiver(std::vector<int> labels, std::vector<Arrow> arrows) : labels_(std::move(labels)), arrows_(std::move(arrows)) {
    validate();
  }

  static Quiver from_labels(std::vector<int> labels, const std::vector<ArrowSpec>& arrows) {
    std::map<int, std::size_t> pos;
    for (std::size_t i = 0; i < labels.size(); ++i) {
      if (!pos.emplace(labels[i], i).second) throw InputError("duplicate vertex label " + std::to_string(labels[i]));
    }
    std::vector<Arrow> as;
    for (const auto& a : arrows) {
      auto s = pos.find(a.source), t = pos.find(a.target);
      if (s == pos.end() || t == pos.end()) throw InputError("arrow " + a.id + " references an unknown vertex");
      as.push_back({a.id, s->second, t->second});
    }
    return Quiver(std::move(labels), std::move(as));
  }

  std::size_t vertex_count() const { return labels_.size(); }
  const std::vector<int>& labels() const { return labels_; }
  int label(std::size_t v) const { return labels_.at(v); }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  const Arrow& arrow(std::size_t k) const { return arrows_.at(k); }

  std::size_t index_of(int label) const {
    for (std::size_t i = 0; i < labels_.size(); ++i)
      if (labels_[i] == label) return i;
    throw InputError("unknown vertex " + std::to_string(label));
  }

  std::vector<std::size_t> incoming(std::size_t v) const {
    std::vector<std::size_t> r;
    for (std::size_t k = 0; k < arrows_.size(); ++k)
      if (arrows_[k].target == v) r.push_back(k);
    return r;
  }
  std::vector<std::size_t> outgoing(std::size_t v) const {
    std::vector<std::size_t> r;
    for (std::size_t k = 0; k < arrows_.size(); ++k)
      if (arrows_[k].source == v) r.push_back(k);
    return r;
  }
  bool is_sink(std::size_t v) const { return outgoing(v).empty(); }
  bool is_source(std::size_t v) const { return incoming(v).empty(); }

  // Sources first; ties broken by vertex position.
  std::vector<std::size_t> topological_order() const {
    std::vector<int> indeg(labels_.size(), 0);
    for (const auto& a : arrows_) ++indeg[a.target];
    std::vector<std::size_t> order;
    std::vector<bool> done(labels_.size(), false);
    while (order.size() < labels_.size()) {
      bool progressed = false;
      for (std::size_t v = 0; v < labels_.size(); ++v) {
        if (done[v] || indeg[v] != 0) continue;
        done[v] = true;
        order.push_back(v);
        for (const auto& a : arrows_)
          if (a.source == v) --indeg[a.target];
        progressed = true;
        break;
      }
      if (!progressed) throw InputError("quiver has an oriented cycle");
    }
    return order;
  }

  // Same quiver with every arrow incident to v reversed.
  Quiver reversed_at(std::size_t v) const {
    Quiver q = *this;
    for (auto& a : q.arrows_)
      if (a.source == v || a.target == v) std::swap(a.source, a.target);
    return q;
  }

  Quiver opposite() const {
    Quiver q = *this;
    for (auto& a : q.arrows_) std::swap(a.source, a.target);
    return q;
  }

  std::vector<std::vector<std::size_t>> connected_components() const {
    std::vector<std::size_t> comp(labels_.size(), static_cast<std::size_t>(-1));
    std::vector<std::vector<std::size_t>> out;
    for (std::size_t s = 0; s < labels_.size(); ++s) {
      if (comp[s] != static_cast<std::size_t>(-1)) continue;
      std::vector<std::size_t> stack{s}, members;
      comp[s] = out.size();
      while (!stack.empty()) {
        const std::size_t v = stack.back();
        stack.pop_back();
        members.push_back(v);
        for (const auto& a : arrows_) {
          for (auto [x, y] : {std::pair{a.source, a.target}, std::pair{a.target, a.source}}) {
            if (x == v && comp[y] == static_cast<std::size_t>(-1)) {
              comp[y] = out.size();
              stack.push_back(y);
            }
          }
        }
      }
      std::sort(members.begin(), members.end());
      out.push_back(std::move(members));
    }
    return out;
  }

  bool is_connected() const { return connected_components().size() <= 1; }

  // Full subquiver on the given vertex positions (kept in ambient order).
  Quiver induced(const std::vector<std::size_t>& keep) const {
    std::vector<std::size_t> sorted = keep;
    std::sort(sorted.begin(), sorted.end());
    std::map<std::size_t, std::size_t> pos;
    std::vector<int> labels;
    for (auto v : sorted) {
      pos[v] = labels.size();
      labels.push_back(labels_.at(v));
    }
    std::vector<Arrow> as;
    for (const auto& a : arrows_) {
      auto s = pos.find(a.source), t = pos.find(a.target);
      if (s != pos.end() && t != pos.end()) as.push_back({a.id, s->second, t->second});
    }
    return Quiver(std::move(labels), std::move(as));
  }

  friend bool operator==(const Quiver&, const Quiver&) = default;

  std::string to_text() const {
    std::ostringstream os;
    os << "vertices";
    for (int l : labels_) os << ' ' << l;
    os << '\n';
    for (const auto& a : arrows_) os << "arrow " << a.id << ' ' << labels_[a.source] << ' ' << labels_[a.target] << '\n';
    return os.str();
  }

 private:
  void validate() const {
    std::set<int> seen;
    for (int l : labels_)
      if (!seen.insert(l).second) throw InputError("duplicate vertex label " + std::to_string(l));
    std::set<std::string> ids;
    for (const auto& a : arrows_) {
      if (!ids.insert(a.id).second) throw InputError("duplicate arrow id " + a.id);
      if (a.source >= labels_.size() || a.target >= labels_.size()) throw InputError("arrow " + a.id + " out of range");
      if (a.source == a.target) throw InputError("loop at arrow " + a.id + " (oriented cycle)");
    }
    (void)topological_order();
  }

  std::vector<int> labels_;
  std::vector<Arrow> arrows_;
};

// ---------------------------------------------------------------------------
// Parsing

namespace detail {

inline Quiver parse_quiver_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("syntax error: ") + e.what());
  }
  if (!j.is_object() || !j.contains("vertices")) throw InputError("syntax error: structured quiver needs a 'vertices' key");
  std::vector<int> labels;
  std::vector<ArrowSpec> arrows;
  try {
    for (const auto& v : j.at("vertices")) labels.push_back(v.get<int>());
    if (j.contains("arrows")) {
      for (const auto& a : j.at("arrows")) {
        if (a.is_array()) {
          if (a.size() != 3) throw InputError("syntax error: arrow arrays need [id, source, target]");
          const std::string id = a[0].is_string() ? a[0].get<std::string>() : a[0].dump();
          arrows.push_back({id, a[1].get<int>(), a[2].get<int>()});
        } else {
          arrows.push_back({a.at("id").get<std::string>(), a.at("source").get<int>(), a.at("target").get<int>()});
        }
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("syntax error: ") + e.what());
  }
  return Quiver::from_labels(std::move(labels), arrows);
}

inline int parse_label(const std::string& tok, std::size_t line) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(tok, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != tok.size() || tok.empty())
    throw InputError("syntax error on line " + std::to_string(line) + ": vertex label '" + tok + "' is not an integer");
  return v;
}

}  // namespace detail

// Text format: `vertices <v1> <v2> ...`, one `arrow <id> <src> <dst>` per arrow,
// `#` starts a comment. Text starting with '{' is read as the structured form.
inline Quiver parse_quiver(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') return detail::parse_quiver_json(text);

  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  bool have_vertices = false;
  std::vector<int> labels;
  std::vector<ArrowSpec> arrows;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    std::istringstream ls(line);
    std::vector<std::string> toks;
    for (std::string t; ls >> t;) toks.push_back(t);
    if (toks.empty()) continue;
    if (toks[0] == "vertices") {
      if (have_vertices) throw InputError("syntax error on line " + std::to_string(lineno) + ": repeated 'vertices' line");
      have_vertices = true;
      for (std::size_t k = 1; k < toks.size(); ++k) labels.push_back(detail::parse_label(toks[k], lineno));
    } else if (toks[0] == "arrow") {
      if (toks.size() != 4) throw InputError("syntax error on line " + std::to_string(lineno) + ": expected 'arrow <id> <src> <dst>'");
      arrows.push_back({toks[1], detail::parse_label(toks[2], lineno), detail::parse_label(toks[3], lineno)});
    } else {
      throw InputError("syntax error on line " + std::to_string(lineno) + ": unknown keyword '" + toks[0] + "'");
    }
  }
  if (!have_vertices) throw InputError("syntax error: missing 'vertices' line");
  return Quiver::from_labels(std::move(labels), arrows);
}

// ---------------------------------------------------------------------------
// Euler form and vertex deletion

inline int euler_form(const Quiver& q, const DimVec& d, const DimVec& e) {
  if (d.size() != q.vertex_count() || e.size() != q.vertex_count())
    throw InputError("euler_form: dimension vector does not match the vertex set");
  int s = 0;
  for (std::size_t i = 0; i < d.size(); ++i) s += d[i] * e[i];
  for (const auto& a : q.arrows()) s -= d[a.source] * e[a.target];
  return s;
}

inline Quiver delete_vertex(const Quiver& q, int label) {
  const std::size_t x = q.index_of(label);
  std::vector<std::size_t> keep;
  for (std::size_t v = 0; v < q.vertex_count(); ++v)
    if (v != x) keep.push_back(v);
  return q.induced(keep);
}

// ---------------------------------------------------------------------------
// Classification

enum class DiagramFamily { Dynkin, Euclidean, Wild };

struct DiagramClass {
  DiagramFamily family = DiagramFamily::Wild;
  char series = '?';  // 'A', 'D', 'E' for Dynkin and Euclidean
  int rank = 0;       // subscript; Euclidean ~X_r has r + 1 vertices
  std::size_t vertices = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // underlying graph, with repetition

  std::string name() const {
    switch (family) {
      case DiagramFamily::Dynkin: return std::string(1, series) + std::to_string(rank);
      case DiagramFamily::Euclidean: return "~" + std::string(1, series) + std::to_string(rank);
      case DiagramFamily::Wild: return "wild";
    }
    return "wild";
  }
  friend bool operator==(const DiagramClass& a, const DiagramClass& b) {
    return a.family == b.family && a.series == b.series && a.rank == b.rank;
  }
};

struct FormSignature {
  bool positive_definite = false;
  bool positive_semidefinite = false;
};

// Symmetric pivoting on the symmetrised Tits form 2I - adjacency.
inline FormSignature tits_form_signature(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 2;
  for (auto [u, v] : edges) {
    m(u, v) -= 1;
    m(v, u) -= 1;
  }
  bool definite = true;
  for (std::size_t k = 0; k < n; ++k) {
    const int s = sgn(m(k, k));
    if (s < 0) return {false, false};
    if (s == 0) {
      definite = false;
      for (std::size_t j = k + 1; j < n; ++j)
        if (sgn(m(k, j)) != 0) return {false, false};
      continue;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      if (sgn(m(i, k)) == 0) continue;
      const Rational f = m(i, k) / m(k, k);
      for (std::size_t j = k; j < n; ++j) m(i, j) -= f * m(k, j);
    }
  }
  return {definite, true};
}

namespace detail {

inline DiagramClass recognise_shape(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  DiagramClass c;
  c.vertices = n;
  c.edges = edges;
  std::map<std::pair<std::size_t, std::size_t>, int> mult;
  std::vector<std::vector<std::size_t>> adj(n);
  for (auto [u, v] : edges) {
    ++mult[{std::min(u, v), std::max(u, v)}];
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  for (const auto& [e, k] : mult) {
    if (k > 2) return c;
    if (k == 2) {
      if (n == 2 && edges.size() == 2) {
        c.family = DiagramFamily::Euclidean;
        c.series = 'A';
        c.rank = 1;
      }
      return c;
    }
  }
  if (n == 1) {
    c.family = DiagramFamily::Dynkin;
    c.series = 'A';
    c.rank = 1;
    return c;
  }
  if (edges.size() == n) {
    const bool cycle = std::all_of(adj.begin(), adj.end(), [](const auto& a) { return a.size() == 2; });
    if (cycle) {
      c.family = DiagramFamily::Euclidean;
      c.series = 'A';
      c.rank = static_cast<int>(n) - 1;
    }
    return c;
  }
  if (edges.size() != n - 1) return c;  // connected with extra cycles: wild

  std::vector<std::size_t> branch;
  for (std::size_t v = 0; v < n; ++v)
    if (adj[v].size() >= 3) branch.push_back(v);
  auto arm_length = [&](std::size_t from, std::size_t first) {
    int len = 1;
    std::size_t prev = from, cur = first;
    while (adj[cur].size() == 2) {
      const std::size_t nxt = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
      prev = cur;
      cur = nxt;
      ++len;
    }
    return std::pair{len, adj[cur].size() == 1};
  };
  if (branch.empty()) {
    c.family = DiagramFamily::Dynkin;
    c.series = 'A';
    c.rank = static_cast<int>(n);
    return c;
  }
  if (branch.size() == 1) {
    const std::size_t b = branch[0];
    std::vector<int> arms;
    for (auto w : adj[b]) arms.push_back(arm_length(b, w).first);
    std::sort(arms.begin(), arms.end());
    if (arms.size() == 4) {
      if (arms == std::vector<int>{1, 1, 1, 1}) {
        c.family = DiagramFamily::Euclidean;
        c.series = 'D';
        c.rank = 4;
      }
      return c;
    }
    if (arms.size() != 3) return c;
    const int p = arms[0], q = arms[1], r = arms[2];
    if (p == 1 && q == 1) {
      c.family = DiagramFamily::Dynkin;
      c.series = 'D';
      c.rank = r + 3;
    } else if (p == 1 && q == 2 && r <= 4) {
      c.family = DiagramFamily::Dynkin;
      c.series = 'E';
      c.rank = r + 4;
    } else if ((p == 2 && q == 2 && r == 2) || (p == 1 && q == 3 && r == 3) || (p == 1 && q == 2 && r == 5)) {
      c.family = DiagramFamily::Euclidean;
      c.series = 'E';
      c.rank = static_cast<int>(n) - 1;
    }
    return c;
  }
  if (branch.size() == 2 && adj[branch[0]].size() == 3 && adj[branch[1]].size() == 3) {
    // ~D_r: two trivalent vertices, each carrying two leaves.
    int leaves = 0;
    for (auto b : branch)
      for (auto w : adj[b])
        if (adj[w].size() == 1) ++leaves;
    if (leaves == 4) {
      c.family = DiagramFamily::Euclidean;
      c.series = 'D';
      c.rank = static_cast<int>(n) - 1;
    }
  }
  return c;
}

}  // namespace detail

inline DiagramClass classify(const Quiver& q) {
  if (q.vertex_count() == 0 || !q.is_connected()) throw InputError("classify: quiver must be connected and non-empty");
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (const auto& a : q.arrows()) edges.emplace_back(a.source, a.target);
  DiagramClass c = detail::recognise_shape(q.vertex_count(), edges);
  const FormSignature sig = tits_form_signature(q.vertex_count(), edges);
  const bool agrees = (c.family == DiagramFamily::Dynkin) == sig.positive_definite &&
                      (c.family == DiagramFamily::Euclidean) == (sig.positive_semidefinite && !sig.positive_definite);
  if (!agrees) throw EngineError("classify: shape catalogue and quadratic form disagree for " + c.name());
  return c;
}

// ---------------------------------------------------------------------------
// Named Dynkin diagrams and their orientations

inline DiagramClass dynkin_diagram(char series, int rank) {
  DiagramClass c;
  c.family = DiagramFamily::Dynkin;
  c.series = series;
  c.rank = rank;
  c.vertices = static_cast<std::size_t>(rank);
  const std::size_t n = c.vertices;
  auto path = [&](std::size_t upto) {
    for (std::size_t i = 0; i + 1 < upto; ++i) c.edges.emplace_back(i, i + 1);
  };
  if (series == 'A' && rank >= 1) {
    path(n);
  } else if (series == 'D' && rank >= 4) {
    path(n - 1);
    c.edges.emplace_back(n - 3, n - 1);
  } else if (series == 'E' && rank >= 6 && rank <= 8) {
    path(n - 1);
    c.edges.emplace_back(2, n - 1);
  } else {
    throw InputError("unknown Dynkin diagram " + std::string(1, series) + std::to_string(rank));
  }
  return c;
}

inline DiagramClass parse_diagram(const std::string& name) {
  if (name.size() < 2) throw InputError("unknown diagram '" + name + "'");
  int rank = 0;
  try {
    std::size_t used = 0;
    rank = std::stoi(name.substr(1), &used);
    if (used != name.size() - 1) throw InputError("");
  } catch (const std::exception&) {
    throw InputError("unknown diagram '" + name + "'");
  }
  return dynkin_diagram(name[0], rank);
}

inline Quiver orient(const DiagramClass& d, unsigned long mask) {
  std::vector<int> labels(d.vertices);
  std::iota(labels.begin(), labels.end(), 1);
  std::vector<Arrow> arrows;
  for (std::size_t e = 0; e < d.edges.size(); ++e) {
    auto [u, v] = d.edges[e];
    if ((mask >> e) & 1UL) std::swap(u, v);
    arrows.push_back({"a" + std::to_string(e + 1), u, v});
  }
  return Quiver(std::move(labels), std::move(arrows));
}

// All 2^{#edges} orientations of a Dynkin tree, ordered by orientation mask
// (mask 0 orients every edge from the smaller to the larger label).
inline std::vector<Quiver> orientations(const DiagramClass& d) {
  if (d.family != DiagramFamily::Dynkin) throw InputError("orientations: Dynkin diagram required");
  if (d.rank > 8) throw InputError("orientations: rank above 8");
  std::vector<Quiver> out;
  for (unsigned long mask = 0; mask < (1UL << d.edges.size()); ++mask) out.push_back(orient(d, mask));
  return out;
}

inline Quiver kronecker_quiver() { return Quiver::from_labels({1, 2}, {{"a", 1, 2}, {"b", 1, 2}}); }

}  // namespace tiltq
