#pragma once

// Unrooted phylogenetic network validation.

#include <algorithm>
#include <cstddef>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "leafdeck/multigraph.hpp"
#include "leafdeck/structure.hpp"

namespace leafdeck {

struct NetworkCheck {
  bool ok = true;
  std::string reason;  // first violated condition, empty when ok

  explicit operator bool() const { return ok; }
};

namespace detail {

inline NetworkCheck fail(std::string reason) { return {false, std::move(reason)}; }

/// Contracting every blob yields a phylogenetic tree: a tree without degree-2
/// vertices whose leaves are exactly the labelled leaves of g.
inline NetworkCheck check_contraction(const LabeledMultigraph& g) {
  const auto tree = contract_blobs(g);
  if (tree.edge_count() + 1 != tree.vertex_count()) {
    return fail("blob contraction is not a tree");
  }
  for (std::size_t k = 0; k < tree.vertex_count(); ++k) {
    if (tree.degree_at(k) == 2) return fail("blob contraction has a degree-2 vertex");
    if (tree.degree_at(k) <= 1 && !tree.at_index(k).label) {
      return fail("blob contraction has an unlabelled leaf");
    }
  }
  return {};
}

/// Every cut-edge splits the labels into two non-empty sides, and no two
/// cut-edges induce the same split.
inline NetworkCheck check_cut_edge_splits(const LabeledMultigraph& g) {
  const auto all = g.labels();
  std::set<std::set<std::string>> splits;
  for (const auto& bridge : cut_edges(g)) {
    std::vector<Edge> rest;
    bool skipped = false;
    for (const auto& e : g.edges()) {
      if (!skipped && e == bridge) {
        skipped = true;
        continue;
      }
      rest.push_back(e);
    }
    const auto without = LabeledMultigraph::build({g.vertices().begin(), g.vertices().end()}, rest);
    const auto comp = connected_components(without);
    const auto side_of_a = comp[without.index_of(bridge.a)];
    std::set<std::string> side;
    for (std::size_t k = 0; k < without.vertex_count(); ++k) {
      const auto& v = without.at_index(k);
      if (v.label && comp[k] == side_of_a) side.insert(*v.label);
    }
    if (side.empty() || side.size() == all.size()) {
      return fail("cut-edge {" + std::to_string(bridge.a) + "," + std::to_string(bridge.b) +
                  "} does not split the labels");
    }
    // Canonical side: the one containing the smallest label.
    if (!side.count(*all.begin())) {
      std::set<std::string> other;
      for (const auto& l : all) {
        if (!side.count(l)) other.insert(l);
      }
      side = std::move(other);
    }
    if (!splits.insert(side).second) {
      return fail("two cut-edges induce the same split of the labels");
    }
  }
  return {};
}

}  // namespace detail

/// Decides whether g is an unrooted phylogenetic network on `labels`. Both the
/// blob-contraction and the cut-edge-split characterisations are evaluated;
/// a disagreement between them throws GraphError.
inline NetworkCheck is_network(const LabeledMultigraph& g, const LabelSet& labels) {
  using detail::fail;
  if (labels.size() < 2) return fail("label set must have at least two elements");
  if (g.vertex_count() == 0) return fail("graph is empty");
  if (!g.is_simple()) return fail("graph has parallel edges or self-loops");
  if (!is_connected(g)) return fail("graph is disconnected");

  LabelSet seen;
  for (std::size_t k = 0; k < g.vertex_count(); ++k) {
    const auto& v = g.at_index(k);
    const auto d = g.degree_at(k);
    if (d == 1 && !v.label) return fail("leaf " + std::to_string(v.id) + " is unlabelled");
    if (d != 1 && v.label) {
      return fail("non-leaf vertex " + std::to_string(v.id) + " carries label '" + *v.label + "'");
    }
    if (v.label) {
      if (!labels.count(*v.label)) return fail("label '" + *v.label + "' is not in the label set");
      seen.insert(*v.label);
    }
  }
  if (seen.size() != labels.size()) return fail("not every label appears on a leaf");
  for (std::size_t k = 0; k < g.vertex_count(); ++k) {
    if (g.degree_at(k) == 2) return fail("vertex " + std::to_string(g.at_index(k).id) + " has degree 2");
  }

  const auto by_contraction = detail::check_contraction(g);
  const auto by_splits = detail::check_cut_edge_splits(g);
  if (by_contraction.ok != by_splits.ok) {
    throw GraphError("network characterisations disagree: contraction says '" +
                     (by_contraction.ok ? std::string("ok") : by_contraction.reason) +
                     "', cut-edge splits say '" + (by_splits.ok ? std::string("ok") : by_splits.reason) + "'");
  }
  return by_contraction;
}

inline NetworkCheck is_network(const LabeledMultigraph& g) { return is_network(g, g.labels()); }

/// Every vertex has degree 1 or 3.
inline bool is_binary(const LabeledMultigraph& g) {
  for (std::size_t k = 0; k < g.vertex_count(); ++k) {
    const auto d = g.degree_at(k);
    if (d != 1 && d != 3) return false;
  }
  return true;
}

/// A multigraph known to satisfy is_network on its label set.
class Network {
 public:
  static Network from(LabeledMultigraph graph, LabelSet labels) {
    if (auto check = is_network(graph, labels); !check) {
      throw GraphError("not a network: " + check.reason);
    }
    return Network(std::move(graph), std::move(labels));
  }

  static Network from(LabeledMultigraph graph) {
    auto labels = graph.labels();
    return from(std::move(graph), std::move(labels));
  }

  const LabeledMultigraph& graph() const { return graph_; }
  const LabelSet& labels() const { return labels_; }

 private:
  Network(LabeledMultigraph graph, LabelSet labels) : graph_(std::move(graph)), labels_(std::move(labels)) {}

  LabeledMultigraph graph_;
  LabelSet labels_;
};

}  // namespace leafdeck
