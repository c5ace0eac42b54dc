#pragma once

// Hop distances and per-label distance signatures.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "leafdeck/multigraph.hpp"

namespace leafdeck {

/// Hop distances from `source` by dense vertex index; nullopt = unreachable.
inline std::vector<std::optional<std::size_t>> distances_from(const LabeledMultigraph& g, VertexId source) {
  std::vector<std::optional<std::size_t>> dist(g.vertex_count());
  std::vector<std::size_t> frontier{g.index_of(source)};
  dist[frontier.front()] = 0;
  for (std::size_t head = 0; head < frontier.size(); ++head) {
    const auto k = frontier[head];
    for (const auto& inc : g.incidences_at(k)) {
      if (!dist[inc.neighbor]) {
        dist[inc.neighbor] = *dist[k] + 1;
        frontier.push_back(inc.neighbor);
      }
    }
  }
  return dist;
}

inline std::optional<std::size_t> distance(const LabeledMultigraph& g, VertexId a, VertexId b) {
  const auto ib = g.index_of(b);
  return distances_from(g, a)[ib];
}

/// Distance from one vertex to every labelled vertex, ordered by label.
struct DistanceSignature {
  std::vector<std::pair<std::string, std::optional<std::size_t>>> entries;

  std::optional<std::size_t> at(const std::string& label) const {
    for (const auto& [l, d] : entries) {
      if (l == label) return d;
    }
    throw GraphError("signature has no label '" + label + "'");
  }

  std::string str() const {
    std::string out = "(";
    for (std::size_t k = 0; k < entries.size(); ++k) {
      if (k) out += ", ";
      out += entries[k].first + ":" + (entries[k].second ? std::to_string(*entries[k].second) : "inf");
    }
    return out + ")";
  }

  bool operator==(const DistanceSignature&) const = default;
  auto operator<=>(const DistanceSignature&) const = default;
};

inline DistanceSignature distance_signature(const LabeledMultigraph& g, VertexId v) {
  const auto dist = distances_from(g, v);
  std::vector<std::pair<std::string, std::optional<std::size_t>>> entries;
  for (std::size_t k = 0; k < g.vertex_count(); ++k) {
    const auto& u = g.at_index(k);
    if (u.label) entries.emplace_back(*u.label, dist[k]);
  }
  std::sort(entries.begin(), entries.end(),
            [](const auto& a, const auto& b) { return natural_less(a.first, b.first); });
  return {std::move(entries)};
}

/// Signatures of every vertex, by dense index.
inline std::vector<DistanceSignature> all_signatures(const LabeledMultigraph& g) {
  // One BFS per label is enough.
  std::vector<std::pair<std::string, std::vector<std::optional<std::size_t>>>> per_label;
  for (std::size_t k = 0; k < g.vertex_count(); ++k) {
    const auto& u = g.at_index(k);
    if (u.label) per_label.emplace_back(*u.label, distances_from(g, u.id));
  }
  std::sort(per_label.begin(), per_label.end(),
            [](const auto& a, const auto& b) { return natural_less(a.first, b.first); });
  std::vector<DistanceSignature> out(g.vertex_count());
  for (std::size_t k = 0; k < g.vertex_count(); ++k) {
    for (const auto& [label, dist] : per_label) out[k].entries.emplace_back(label, dist[k]);
  }
  return out;
}

/// Vertices of g whose signature equals `signature`.
inline std::vector<VertexId> vertices_with_signature(const LabeledMultigraph& g, const DistanceSignature& signature) {
  std::vector<VertexId> out;
  const auto all = all_signatures(g);
  for (std::size_t k = 0; k < all.size(); ++k) {
    if (all[k] == signature) out.push_back(g.at_index(k).id);
  }
  return out;
}

}  // namespace leafdeck
