#pragma once

// Structural operations: vertex deletion, degree-2 suppression, removal
// (deletion followed by suppression), bridges, 2-edge-connected components
// and blob contraction.

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "leafdeck/multigraph.hpp"

namespace leafdeck {

/// Deletes `a` and its incident edges without suppressing anything.
inline LabeledMultigraph delete_vertex(const LabeledMultigraph& g, VertexId a) {
  g.index_of(a);
  std::vector<Vertex> vertices;
  vertices.reserve(g.vertex_count());
  for (const auto& v : g.vertices()) {
    if (v.id != a) vertices.push_back(v);
  }
  std::vector<Edge> edges;
  for (const auto& e : g.edges()) {
    if (e.a != a && e.b != a) edges.push_back(e);
  }
  return LabeledMultigraph::build(std::move(vertices), std::move(edges));
}

/// One suppressed vertex together with the two endpoints it was spliced
/// between at the time (equal when a self-loop was created).
struct SuppressedVertex {
  Vertex vertex;
  VertexId left;
  VertexId right;
};

struct SuppressionResult {
  LabeledMultigraph graph;
  std::vector<SuppressedVertex> log;
};

/// Suppresses unlabelled degree-2 vertices in the given priority order;
/// candidates missing from `order` follow in ascending id. Surviving vertices
/// keep their ids, labels and tags. A vertex whose only incident edge is a
/// self-loop is left in place. Throws GraphError on a labelled degree-2
/// vertex.
inline SuppressionResult suppress_degree_two_with_log(const LabeledMultigraph& g,
                                                      const std::vector<VertexId>& order = {}) {
  const std::size_t n = g.vertex_count();
  for (std::size_t k = 0; k < n; ++k) {
    const auto& v = g.at_index(k);
    if (g.degree_at(k) == 2 && v.label) {
      throw GraphError("cannot suppress labelled degree-2 vertex " + std::to_string(v.id) + " ('" +
                       *v.label + "')");
    }
  }

  struct LiveEdge {
    std::size_t a, b;
    bool alive;
  };
  std::vector<LiveEdge> edges;
  std::vector<std::vector<std::size_t>> incident(n);
  for (const auto& e : g.edges()) {
    const auto ia = g.index_of(e.a);
    const auto ib = g.index_of(e.b);
    incident[ia].push_back(edges.size());
    if (ia != ib) incident[ib].push_back(edges.size());
    edges.push_back({ia, ib, true});
  }

  std::vector<std::size_t> worklist;
  std::vector<bool> queued(n, false);
  for (VertexId id : order) {
    if (auto k = g.find_index(id); k && g.degree_at(*k) == 2 && !queued[*k]) {
      worklist.push_back(*k);
      queued[*k] = true;
    }
  }
  for (std::size_t k = 0; k < n; ++k) {
    if (g.degree_at(k) == 2 && !queued[k]) {
      worklist.push_back(k);
      queued[k] = true;
    }
  }

  std::vector<bool> removed(n, false);
  std::vector<SuppressedVertex> log;
  auto live_incident = [&](std::size_t k) {
    std::vector<std::size_t> out;
    for (auto e : incident[k]) {
      if (edges[e].alive) out.push_back(e);
    }
    return out;
  };

  // Splicing never changes the degree of any surviving vertex, so one pass
  // over the initial degree-2 vertices reaches the fixpoint.
  for (std::size_t k : worklist) {
    const auto live = live_incident(k);
    if (live.size() == 1) continue;  // lone self-loop
    const auto other = [&](std::size_t e) { return edges[e].a == k ? edges[e].b : edges[e].a; };
    const std::size_t left = other(live[0]);
    const std::size_t right = other(live[1]);
    edges[live[0]].alive = false;
    edges[live[1]].alive = false;
    const std::size_t fresh = edges.size();
    edges.push_back({left, right, true});
    incident[left].push_back(fresh);
    if (left != right) incident[right].push_back(fresh);
    incident[k].clear();
    removed[k] = true;
    log.push_back({g.at_index(k), g.at_index(left).id, g.at_index(right).id});
  }

  std::vector<Vertex> vertices;
  for (std::size_t k = 0; k < n; ++k) {
    if (!removed[k]) vertices.push_back(g.at_index(k));
  }
  std::vector<Edge> out_edges;
  for (const auto& e : edges) {
    if (e.alive) out_edges.push_back(Edge::of(g.at_index(e.a).id, g.at_index(e.b).id));
  }
  return {LabeledMultigraph::build(std::move(vertices), std::move(out_edges)), std::move(log)};
}

inline LabeledMultigraph suppress_degree_two(const LabeledMultigraph& g,
                                             const std::vector<VertexId>& order = {}) {
  return suppress_degree_two_with_log(g, order).graph;
}

/// Deletes `a` and then suppresses every degree-2 vertex.
inline LabeledMultigraph remove_vertex(const LabeledMultigraph& g, VertexId a) {
  return suppress_degree_two(delete_vertex(g, a));
}

inline LabeledMultigraph remove_label(const LabeledMultigraph& g, std::string_view label) {
  auto a = g.find_label(label);
  if (!a) throw GraphError("no vertex labelled '" + std::string(label) + "'");
  return remove_vertex(g, *a);
}

/// Component index per vertex (dense index order).
inline std::vector<std::size_t> connected_components(const LabeledMultigraph& g,
                                                     std::size_t* count = nullptr) {
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> comp(n, n);
  std::size_t next = 0;
  std::vector<std::size_t> stack;
  for (std::size_t s = 0; s < n; ++s) {
    if (comp[s] != n) continue;
    comp[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      const auto k = stack.back();
      stack.pop_back();
      for (const auto& inc : g.incidences_at(k)) {
        if (comp[inc.neighbor] == n) {
          comp[inc.neighbor] = next;
          stack.push_back(inc.neighbor);
        }
      }
    }
    ++next;
  }
  if (count) *count = next;
  return comp;
}

inline bool is_connected(const LabeledMultigraph& g) {
  std::size_t count = 0;
  connected_components(g, &count);
  return count <= 1;
}

namespace detail {

inline void require_connected(const LabeledMultigraph& g, const char* what) {
  if (!is_connected(g)) throw GraphError(std::string(what) + " requires a connected graph");
}

/// Bridge flags per incidence pair (k, neighbor) collapsed to edge keys.
/// Iterative lowpoint DFS; a parallel bundle (count > 1) is never a bridge.
inline std::vector<std::pair<std::size_t, std::size_t>> bridge_pairs(const LabeledMultigraph& g) {
  const std::size_t n = g.vertex_count();
  constexpr std::size_t unvisited = static_cast<std::size_t>(-1);
  std::vector<std::size_t> order(n, unvisited), low(n, 0);
  std::vector<std::pair<std::size_t, std::size_t>> bridges;
  std::size_t timer = 0;

  struct Frame {
    std::size_t vertex;
    std::size_t parent;
    std::size_t next;
  };
  std::vector<Frame> stack;
  for (std::size_t root = 0; root < n; ++root) {
    if (order[root] != unvisited) continue;
    order[root] = low[root] = timer++;
    stack.push_back({root, unvisited, 0});
    while (!stack.empty()) {
      auto& top = stack.back();
      const auto list = g.incidences_at(top.vertex);
      if (top.next < list.size()) {
        const auto inc = list[top.next++];
        if (inc.neighbor == top.parent) {
          // A parallel copy of the tree edge is a back edge to the parent.
          if (inc.count > 1) low[top.vertex] = std::min(low[top.vertex], order[inc.neighbor]);
          continue;
        }
        if (order[inc.neighbor] == unvisited) {
          order[inc.neighbor] = low[inc.neighbor] = timer++;
          stack.push_back({inc.neighbor, top.vertex, 0});
        } else {
          low[top.vertex] = std::min(low[top.vertex], order[inc.neighbor]);
        }
      } else {
        const Frame done = top;
        stack.pop_back();
        if (done.parent != unvisited) {
          low[done.parent] = std::min(low[done.parent], low[done.vertex]);
          if (low[done.vertex] > order[done.parent]) {
            bridges.emplace_back(std::min(done.parent, done.vertex), std::max(done.parent, done.vertex));
          }
        }
      }
    }
  }
  std::sort(bridges.begin(), bridges.end());
  return bridges;
}

}  // namespace detail

/// Every edge whose removal disconnects g.
inline std::vector<Edge> cut_edges(const LabeledMultigraph& g) {
  detail::require_connected(g, "cut_edges");
  std::vector<Edge> out;
  for (const auto& [a, b] : detail::bridge_pairs(g)) {
    out.push_back(Edge::of(g.at_index(a).id, g.at_index(b).id));
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// A maximal 2-edge-connected vertex set; a blob when it spans at least two
/// edges.
struct EdgeComponent {
  std::vector<VertexId> vertices;
  std::size_t internal_edges = 0;
  bool is_blob = false;
};

struct BlobDecomposition {
  std::vector<EdgeComponent> components;
  std::vector<std::size_t> component_of;  // by dense vertex index
};

inline BlobDecomposition blob_decomposition(const LabeledMultigraph& g) {
  detail::require_connected(g, "blobs");
  const std::size_t n = g.vertex_count();
  const auto bridges = detail::bridge_pairs(g);
  auto is_bridge = [&](std::size_t a, std::size_t b) {
    return std::binary_search(bridges.begin(), bridges.end(), std::make_pair(std::min(a, b), std::max(a, b)));
  };
  BlobDecomposition out;
  out.component_of.assign(n, n);
  std::vector<std::size_t> stack;
  for (std::size_t s = 0; s < n; ++s) {
    if (out.component_of[s] != n) continue;
    const std::size_t c = out.components.size();
    out.components.emplace_back();
    out.component_of[s] = c;
    stack.push_back(s);
    while (!stack.empty()) {
      const auto k = stack.back();
      stack.pop_back();
      out.components[c].vertices.push_back(g.at_index(k).id);
      for (const auto& inc : g.incidences_at(k)) {
        if (out.component_of[inc.neighbor] == n && !is_bridge(k, inc.neighbor)) {
          out.component_of[inc.neighbor] = c;
          stack.push_back(inc.neighbor);
        }
      }
    }
    std::sort(out.components[c].vertices.begin(), out.components[c].vertices.end());
  }
  for (const auto& e : g.edges()) {
    const auto ca = out.component_of[g.index_of(e.a)];
    if (ca == out.component_of[g.index_of(e.b)]) ++out.components[ca].internal_edges;
  }
  for (auto& comp : out.components) comp.is_blob = comp.internal_edges >= 2;
  return out;
}

inline std::vector<EdgeComponent> blobs(const LabeledMultigraph& g) {
  return blob_decomposition(g).components;
}

/// Quotient graph with one vertex per 2-edge-connected component (ids are
/// component indices) and one edge per bridge. A component containing exactly
/// one labelled vertex carries that label.
inline LabeledMultigraph contract_blobs(const LabeledMultigraph& g) {
  const auto decomposition = blob_decomposition(g);
  std::vector<Vertex> vertices;
  for (std::size_t c = 0; c < decomposition.components.size(); ++c) {
    Vertex v{static_cast<VertexId>(c), std::nullopt, {}};
    std::size_t labelled = 0;
    for (VertexId id : decomposition.components[c].vertices) {
      const auto& original = g.vertex(id);
      if (original.label) {
        ++labelled;
        v.label = original.label;
        if (decomposition.components[c].vertices.size() == 1) v.tag = original.tag;
      }
    }
    if (labelled > 1) v.label.reset();
    vertices.push_back(std::move(v));
  }
  std::vector<Edge> edges;
  for (const auto& e : g.edges()) {
    const auto ca = decomposition.component_of[g.index_of(e.a)];
    const auto cb = decomposition.component_of[g.index_of(e.b)];
    if (ca != cb) edges.push_back(Edge::of(static_cast<VertexId>(ca), static_cast<VertexId>(cb)));
  }
  return LabeledMultigraph::build(std::move(vertices), std::move(edges));
}

}  // namespace leafdeck
