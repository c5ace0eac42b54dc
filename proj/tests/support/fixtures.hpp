#pragma once

// Small hand-encoded graphs. Vertices are given by name; names starting with
// 'x' become labels, everything else is unlabelled.

#include <initializer_list>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "leafdeck/multigraph.hpp"

namespace testsupport {

inline leafdeck::LabeledMultigraph named_graph(std::initializer_list<std::pair<std::string, std::string>> edges) {
  std::map<std::string, leafdeck::VertexId> ids;
  std::vector<leafdeck::Vertex> vertices;
  auto id_of = [&](const std::string& name) {
    auto [it, fresh] = ids.emplace(name, static_cast<leafdeck::VertexId>(ids.size()));
    if (fresh) {
      leafdeck::Vertex v{it->second, std::nullopt, {}};
      if (!name.empty() && name[0] == 'x') v.label = name;
      vertices.push_back(v);
    }
    return it->second;
  };
  std::vector<leafdeck::Edge> out;
  for (const auto& [a, b] : edges) {
    const auto ia = id_of(a);
    const auto ib = id_of(b);
    out.push_back(leafdeck::Edge::of(ia, ib));
  }
  return leafdeck::LabeledMultigraph::build(std::move(vertices), std::move(out));
}

// Two-leaf cherry {x1,x2} on A, the square B-P-C-D-Q-B with chord P-Q, x3 on
// C and x4 on D.
inline leafdeck::LabeledMultigraph small_network() {
  return named_graph({{"x1", "A"}, {"x2", "A"}, {"A", "B"}, {"B", "P"}, {"P", "C"}, {"B", "Q"},
                      {"Q", "D"}, {"P", "Q"}, {"C", "D"}, {"x3", "C"}, {"x4", "D"}});
}

inline leafdeck::LabeledMultigraph small_network_without(int leaf) {
  switch (leaf) {
    case 1:
      return named_graph({{"x2", "B"}, {"B", "P"}, {"P", "C"}, {"B", "Q"}, {"Q", "D"}, {"P", "Q"},
                          {"C", "D"}, {"x3", "C"}, {"x4", "D"}});
    case 2:
      return named_graph({{"x1", "B"}, {"B", "P"}, {"P", "C"}, {"B", "Q"}, {"Q", "D"}, {"P", "Q"},
                          {"C", "D"}, {"x3", "C"}, {"x4", "D"}});
    case 3:
      return named_graph({{"x1", "A"}, {"x2", "A"}, {"A", "B"}, {"B", "P"}, {"B", "Q"}, {"Q", "D"},
                          {"P", "Q"}, {"P", "D"}, {"x4", "D"}});
    default:
      return named_graph({{"x1", "A"}, {"x2", "A"}, {"A", "B"}, {"B", "P"}, {"P", "C"}, {"B", "Q"},
                          {"P", "Q"}, {"Q", "C"}, {"x3", "C"}});
  }
}

inline leafdeck::LabeledMultigraph quartet(const char* a, const char* b, const char* c, const char* d) {
  return named_graph({{a, "L"}, {b, "L"}, {"L", "R"}, {c, "R"}, {d, "R"}});
}

inline leafdeck::LabeledMultigraph star3(const char* a, const char* b, const char* c) {
  return named_graph({{a, "S"}, {b, "S"}, {c, "S"}});
}

// (a,b),c,(d,e) on a three-vertex spine.
inline leafdeck::LabeledMultigraph caterpillar5(const char* a, const char* b, const char* c, const char* d,
                                                const char* e) {
  return named_graph({{a, "P"}, {b, "P"}, {"P", "Q"}, {c, "Q"}, {"Q", "R"}, {d, "R"}, {e, "R"}});
}

}  // namespace testsupport
