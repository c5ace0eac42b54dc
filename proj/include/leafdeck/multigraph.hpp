#pragma once

// Undirected multigraph with optionally labelled vertices. Parallel edges and
// self-loops are allowed; a self-loop adds 2 to the degree of its vertex.
// Graphs are immutable once built.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "leafdeck/tag.hpp"

namespace leafdeck {

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using VertexId = std::uint32_t;

struct Vertex {
  VertexId id = 0;
  std::optional<std::string> label;
  VertexTag tag;

  bool operator==(const Vertex&) const = default;
};

/// Unordered endpoint pair, stored with a <= b.
struct Edge {
  VertexId a = 0;
  VertexId b = 0;

  static Edge of(VertexId u, VertexId v) { return u <= v ? Edge{u, v} : Edge{v, u}; }
  bool is_loop() const { return a == b; }

  bool operator==(const Edge&) const = default;
  auto operator<=>(const Edge&) const = default;
};

/// Orders labels so that embedded numbers compare numerically ("x2" < "x10").
inline bool natural_less(std::string_view lhs, std::string_view rhs) {
  std::size_t i = 0, j = 0;
  auto is_digit = [](char c) { return c >= '0' && c <= '9'; };
  while (i < lhs.size() && j < rhs.size()) {
    if (is_digit(lhs[i]) && is_digit(rhs[j])) {
      std::size_t i_end = i, j_end = j;
      while (i_end < lhs.size() && is_digit(lhs[i_end])) ++i_end;
      while (j_end < rhs.size() && is_digit(rhs[j_end])) ++j_end;
      auto a = lhs.substr(i, i_end - i);
      auto b = rhs.substr(j, j_end - j);
      while (a.size() > 1 && a.front() == '0') a.remove_prefix(1);
      while (b.size() > 1 && b.front() == '0') b.remove_prefix(1);
      if (a.size() != b.size()) return a.size() < b.size();
      if (a != b) return a < b;
      i = i_end;
      j = j_end;
    } else {
      if (lhs[i] != rhs[j]) return lhs[i] < rhs[j];
      ++i;
      ++j;
    }
  }
  if ((lhs.size() - i) != (rhs.size() - j)) return (lhs.size() - i) < (rhs.size() - j);
  return lhs < rhs;
}

struct NaturalLess {
  bool operator()(std::string_view a, std::string_view b) const { return natural_less(a, b); }
};

using LabelSet = std::set<std::string, NaturalLess>;

class LabeledMultigraph {
 public:
  /// Neighbour of a vertex (by dense index) and the number of parallel edges
  /// to it. Self-loops are kept separately.
  struct Incidence {
    std::size_t neighbor;
    std::size_t count;
  };

  LabeledMultigraph() = default;

  /// Validates and builds. Throws GraphError on duplicate ids, duplicate
  /// labels, empty labels or dangling edge endpoints.
  static LabeledMultigraph build(std::vector<Vertex> vertices, std::vector<Edge> edges) {
    LabeledMultigraph g;
    std::sort(vertices.begin(), vertices.end(),
              [](const Vertex& a, const Vertex& b) { return a.id < b.id; });
    for (std::size_t k = 1; k < vertices.size(); ++k) {
      if (vertices[k].id == vertices[k - 1].id) {
        throw GraphError("duplicate vertex id " + std::to_string(vertices[k].id));
      }
    }
    std::set<std::string, std::less<>> seen;
    for (const auto& v : vertices) {
      if (!v.label) continue;
      if (v.label->empty()) throw GraphError("vertex " + std::to_string(v.id) + " has an empty label");
      if (!seen.insert(*v.label).second) throw GraphError("duplicate label '" + *v.label + "'");
    }
    g.vertices_ = std::move(vertices);
    for (auto& e : edges) {
      e = Edge::of(e.a, e.b);
      if (!g.contains(e.a) || !g.contains(e.b)) {
        throw GraphError("edge {" + std::to_string(e.a) + "," + std::to_string(e.b) +
                         "} has an endpoint that is not a vertex");
      }
    }
    std::sort(edges.begin(), edges.end());
    g.edges_ = std::move(edges);
    g.index_edges();
    return g;
  }

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  /// |E| - |V|, the quantity kept fixed by degree-2 suppression.
  std::int64_t excess() const {
    return static_cast<std::int64_t>(edges_.size()) - static_cast<std::int64_t>(vertices_.size());
  }

  std::span<const Vertex> vertices() const { return vertices_; }
  std::span<const Edge> edges() const { return edges_; }

  bool contains(VertexId id) const { return find_index(id).has_value(); }

  std::optional<std::size_t> find_index(VertexId id) const {
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), id,
                               [](const Vertex& v, VertexId key) { return v.id < key; });
    if (it == vertices_.end() || it->id != id) return std::nullopt;
    return static_cast<std::size_t>(it - vertices_.begin());
  }

  std::size_t index_of(VertexId id) const {
    if (auto k = find_index(id)) return *k;
    throw GraphError("unknown vertex " + std::to_string(id));
  }

  const Vertex& vertex(VertexId id) const { return vertices_[index_of(id)]; }
  const Vertex& at_index(std::size_t k) const { return vertices_[k]; }

  std::size_t degree(VertexId id) const { return degree_at(index_of(id)); }
  std::size_t degree_at(std::size_t k) const { return degree_[k]; }

  std::size_t loops_at(std::size_t k) const { return loops_[k]; }

  std::span<const Incidence> incidences_at(std::size_t k) const { return adjacency_[k]; }

  /// Number of edges joining a and b (self-loops when a == b).
  std::size_t multiplicity(VertexId a, VertexId b) const {
    const auto ia = index_of(a);
    const auto ib = index_of(b);
    if (ia == ib) return loops_[ia];
    const auto& list = adjacency_[ia];
    auto it = std::lower_bound(list.begin(), list.end(), ib,
                               [](const Incidence& inc, std::size_t key) { return inc.neighbor < key; });
    return (it != list.end() && it->neighbor == ib) ? it->count : 0;
  }

  std::optional<VertexId> find_label(std::string_view label) const {
    for (const auto& v : vertices_) {
      if (v.label && *v.label == label) return v.id;
    }
    return std::nullopt;
  }

  std::optional<VertexId> find_tag(const VertexTag& tag) const {
    for (const auto& v : vertices_) {
      if (v.tag == tag) return v.id;
    }
    return std::nullopt;
  }

  LabelSet labels() const {
    LabelSet out;
    for (const auto& v : vertices_) {
      if (v.label) out.insert(*v.label);
    }
    return out;
  }

  VertexId next_free_id() const { return vertices_.empty() ? 0 : vertices_.back().id + 1; }

  bool is_simple() const {
    for (std::size_t k = 0; k < vertices_.size(); ++k) {
      if (loops_[k] != 0) return false;
      for (const auto& inc : adjacency_[k]) {
        if (inc.count > 1) return false;
      }
    }
    return true;
  }

  bool operator==(const LabeledMultigraph& other) const {
    return vertices_ == other.vertices_ && edges_ == other.edges_;
  }

 private:
  void index_edges() {
    const std::size_t n = vertices_.size();
    adjacency_.assign(n, {});
    loops_.assign(n, 0);
    degree_.assign(n, 0);
    std::vector<std::map<std::size_t, std::size_t>> counts(n);
    for (const auto& e : edges_) {
      const auto ia = index_of(e.a);
      const auto ib = index_of(e.b);
      if (ia == ib) {
        ++loops_[ia];
        degree_[ia] += 2;
      } else {
        ++counts[ia][ib];
        ++counts[ib][ia];
        ++degree_[ia];
        ++degree_[ib];
      }
    }
    for (std::size_t k = 0; k < n; ++k) {
      adjacency_[k].reserve(counts[k].size());
      for (const auto& [nbr, c] : counts[k]) adjacency_[k].push_back({nbr, c});
    }
  }

  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Incidence>> adjacency_;
  std::vector<std::size_t> loops_;
  std::vector<std::size_t> degree_;
};

/// Incremental construction with sequential ids. Tagged vertices can be
/// fetched-or-created by tag so that fragments share vertices by identity.
class GraphBuilder {
 public:
  VertexId add_vertex(VertexTag tag = {}, std::optional<std::string> label = std::nullopt) {
    const VertexId id = next_id_++;
    if (!tag.is_anonymous()) {
      if (!by_tag_.emplace(tag, id).second) {
        throw GraphError("tag " + tag.str() + " already allocated");
      }
    }
    vertices_.push_back({id, std::move(label), std::move(tag)});
    return id;
  }

  /// Id of the vertex carrying `tag`, creating it if absent.
  VertexId vertex_for(const VertexTag& tag) {
    if (auto it = by_tag_.find(tag); it != by_tag_.end()) return it->second;
    return add_vertex(tag);
  }

  std::optional<VertexId> find(const VertexTag& tag) const {
    if (auto it = by_tag_.find(tag); it != by_tag_.end()) return it->second;
    return std::nullopt;
  }

  void add_edge(VertexId a, VertexId b) { edges_.push_back(Edge::of(a, b)); }

  LabeledMultigraph build() const { return LabeledMultigraph::build(vertices_, edges_); }

 private:
  VertexId next_id_ = 0;
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  std::map<VertexTag, VertexId> by_tag_;
};

inline std::size_t degree(const LabeledMultigraph& g, VertexId v) { return g.degree(v); }

}  // namespace leafdeck
