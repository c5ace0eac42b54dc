#pragma once

// The even/odd counterexample family. For r >= 4 leaves:
//
//   nonbinary graph   one hub U(w) per word w of the chosen parity, two side
//                     vertices V(i,0), V(i,1) per position, leaf x_i on V(i,0);
//                     U(w) is adjacent to V(i, w(i)).
//   expanded graph    every hub becomes a caterpillar and every side vertex a
//                     lexicographic tree; they share the Z(w,i) vertices.
//   binary network    the expanded graph with degree-2 vertices suppressed.
//
// The witness builders return the explicit maps that make the one-leaf-deleted
// graphs of the two parities equivalent.

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "leafdeck/iso.hpp"
#include "leafdeck/multigraph.hpp"
#include "leafdeck/network.hpp"
#include "leafdeck/seq.hpp"
#include "leafdeck/structure.hpp"

namespace leafdeck {

enum class Variant { nonbinary, expanded, binary };

inline std::string_view to_string(Variant v) {
  switch (v) {
    case Variant::nonbinary:
      return "M";
    case Variant::expanded:
      return "G";
    case Variant::binary:
      return "N";
  }
  return "?";
}

inline Variant parse_variant(std::string_view text) {
  if (text == "M") return Variant::nonbinary;
  if (text == "G") return Variant::expanded;
  if (text == "N") return Variant::binary;
  throw std::invalid_argument("unknown variant '" + std::string(text) + "' (expected M, G or N)");
}

struct ConstructionParams {
  std::size_t r = 4;
  Parity parity = Parity::even;
  Variant variant = Variant::binary;
};

inline void require_leaf_count(std::size_t r) {
  if (r < 4) throw std::invalid_argument("construction needs r >= 4, got " + std::to_string(r));
  if (r > 20) throw std::invalid_argument("construction supports r <= 20, got " + std::to_string(r));
}

inline std::string leaf_label(std::size_t i) { return "x" + std::to_string(i); }

inline LabelSet leaf_labels(std::size_t r) {
  LabelSet out;
  for (std::size_t i = 1; i <= r; ++i) out.insert(leaf_label(i));
  return out;
}

/// The non-binary graph on words of the given parity.
inline LabeledMultigraph build_nonbinary(std::size_t r, Parity parity) {
  require_leaf_count(r);
  GraphBuilder b;
  for (std::size_t i = 1; i <= r; ++i) {
    const auto v0 = b.add_vertex(VertexTag::V(i, 0));
    b.add_vertex(VertexTag::V(i, 1));
    const auto x = b.add_vertex(VertexTag::X(i), leaf_label(i));
    b.add_edge(x, v0);
  }
  for (const auto& w : enumerate_parity(r, parity)) {
    const auto u = b.add_vertex(VertexTag::U(w));
    for (std::size_t i = 1; i <= r; ++i) b.add_edge(u, *b.find(VertexTag::V(i, w(i))));
  }
  return b.build();
}

/// Adds the caterpillar of w: hub U(w), spine Y(w,1..r-3), ends Z(w,1..r).
/// Z vertices already present in the builder are reused.
inline void add_caterpillar(GraphBuilder& b, const BinarySeq& w) {
  const std::size_t r = w.length();
  require_leaf_count(r);
  const auto u = b.add_vertex(VertexTag::U(w));
  std::vector<VertexId> y(r - 2);
  for (std::size_t k = 1; k <= r - 3; ++k) y[k] = b.add_vertex(VertexTag::Y(w, k));
  auto z = [&](std::size_t k) { return b.vertex_for(VertexTag::Z(w, k)); };
  b.add_edge(u, z(1));
  b.add_edge(u, z(2));
  b.add_edge(u, y[1]);
  for (std::size_t k = 1; k + 4 <= r; ++k) {
    b.add_edge(y[k], z(k + 2));
    b.add_edge(y[k], y[k + 1]);
  }
  b.add_edge(y[r - 3], z(r - 1));
  b.add_edge(y[r - 3], z(r));
}

inline LabeledMultigraph build_caterpillar(const BinarySeq& w) {
  GraphBuilder b;
  add_caterpillar(b, w);
  return b.build();
}

namespace detail {

inline std::size_t exact_log2(std::size_t n) {
  std::size_t t = 0;
  while ((std::size_t{1} << t) < n) ++t;
  if ((std::size_t{1} << t) != n) throw std::invalid_argument("set size " + std::to_string(n) + " is not a power of two");
  return t;
}

/// Root-to-leaf step sequence of leaf number `index` in a balanced tree of
/// the given depth: 'L' for a 0 bit, 'R' for a 1 bit, most significant first.
inline std::string leaf_path(std::size_t index, std::size_t depth) {
  std::string path(depth, 'L');
  for (std::size_t d = 0; d < depth; ++d) {
    if ((index >> (depth - 1 - d)) & 1U) path[d] = 'R';
  }
  return path;
}

}  // namespace detail

/// Adds the fully balanced binary tree whose leaves Z(w,i), w in S, appear in
/// lexicographic order from left to right. Internal vertices are tagged
/// Lex(i,h,path) with h the position-i bit of the first word; the root takes
/// `root_tag` when one is given. Returns the root id.
inline VertexId add_lex_tree(GraphBuilder& b, std::vector<BinarySeq> words, std::size_t i,
                             const std::optional<VertexTag>& root_tag = std::nullopt) {
  if (words.empty()) throw std::invalid_argument("lexicographic tree needs a non-empty set");
  const std::size_t t = detail::exact_log2(words.size());
  if (t < 1) throw std::invalid_argument("lexicographic tree needs at least two leaves");
  words = sorted_lex(std::move(words));
  for (std::size_t k = 1; k < words.size(); ++k) {
    if (words[k] == words[k - 1]) throw std::invalid_argument("lexicographic tree words must be distinct");
  }
  const int h = words.front().at(i);

  std::map<std::string, VertexId> internal;
  auto internal_vertex = [&](const std::string& path) {
    if (auto it = internal.find(path); it != internal.end()) return it->second;
    const auto tag = (path.empty() && root_tag) ? *root_tag : VertexTag::Lex(i, h, path);
    const auto id = b.add_vertex(tag);
    internal.emplace(path, id);
    return id;
  };
  // Breadth-first allocation keeps ids ordered by depth, then left to right.
  for (std::size_t d = 0; d < t; ++d) {
    for (std::size_t k = 0; k < (std::size_t{1} << d); ++k) {
      const auto path = detail::leaf_path(k, d);
      const auto id = internal_vertex(path);
      if (d > 0) b.add_edge(internal_vertex(path.substr(0, d - 1)), id);
    }
  }
  for (std::size_t k = 0; k < words.size(); ++k) {
    const auto path = detail::leaf_path(k, t);
    b.add_edge(internal_vertex(path.substr(0, t - 1)), b.vertex_for(VertexTag::Z(words[k], i)));
  }
  return internal_vertex("");
}

inline LabeledMultigraph build_lex_tree(const std::vector<BinarySeq>& words, std::size_t i) {
  GraphBuilder b;
  add_lex_tree(b, words, i);
  return b.build();
}

/// The lexicographic tree over words of the given parity with w(i) = h; its
/// root is tagged V(i,h).
inline LabeledMultigraph build_parity_lex_tree(std::size_t r, Parity parity, std::size_t i, int h) {
  require_leaf_count(r);
  GraphBuilder b;
  add_lex_tree(b, subset_ih(r, parity, i, h), i, VertexTag::V(i, h));
  return b.build();
}

/// Caterpillars for every word of the parity, lexicographic trees for every
/// (i,h), glued along the shared Z(w,i), plus leaf x_i on V(i,0).
inline LabeledMultigraph build_expanded(std::size_t r, Parity parity) {
  require_leaf_count(r);
  GraphBuilder b;
  for (const auto& w : enumerate_parity(r, parity)) add_caterpillar(b, w);
  for (std::size_t i = 1; i <= r; ++i) {
    for (int h = 0; h <= 1; ++h) add_lex_tree(b, subset_ih(r, parity, i, h), i, VertexTag::V(i, h));
  }
  for (std::size_t i = 1; i <= r; ++i) {
    const auto x = b.add_vertex(VertexTag::X(i), leaf_label(i));
    b.add_edge(x, *b.find(VertexTag::V(i, 0)));
  }
  return b.build();
}

struct BinaryNetworkBuild {
  Network network;
  std::vector<SuppressedVertex> suppressed;
};

/// The expanded graph with every degree-2 vertex suppressed, validated as a
/// binary network on {x1..xr}. Hub tags survive suppression; the Z and V(i,1)
/// tags are kept in `suppressed`.
inline BinaryNetworkBuild build_binary_network_with_log(std::size_t r, Parity parity) {
  auto result = suppress_degree_two_with_log(build_expanded(r, parity));
  if (!is_binary(result.graph)) throw GraphError("suppressed graph is not binary");
  return {Network::from(std::move(result.graph), leaf_labels(r)), std::move(result.log)};
}

inline Network build_binary_network(std::size_t r, Parity parity) {
  return build_binary_network_with_log(r, parity).network;
}

inline LabeledMultigraph build(const ConstructionParams& params) {
  switch (params.variant) {
    case Variant::nonbinary:
      return build_nonbinary(params.r, params.parity);
    case Variant::expanded:
      return build_expanded(params.r, params.parity);
    case Variant::binary:
      return build_binary_network(params.r, params.parity).graph();
  }
  throw std::invalid_argument("unknown variant");
}

// ---------------------------------------------------------------------------
// Witnesses

using TagMap = std::map<VertexTag, VertexTag>;

/// Turns a tag-level map into a vertex map between two tagged graphs. Every
/// vertex of `source` must carry a tag that `map` sends to a tag of `target`.
inline IsoWitness witness_from_tags(const LabeledMultigraph& source, const LabeledMultigraph& target, const TagMap& map) {
  std::map<VertexTag, VertexId> target_ids;
  for (const auto& v : target.vertices()) target_ids.emplace(v.tag, v.id);
  IsoWitness f;
  for (const auto& v : source.vertices()) {
    auto image = map.find(v.tag);
    if (image == map.end()) throw GraphError("tag map has no image for " + v.tag.str());
    auto id = target_ids.find(image->second);
    if (id == target_ids.end()) throw GraphError("target has no vertex tagged " + image->second.str());
    f.mapping.emplace(v.id, id->second);
  }
  return f;
}

inline void merge_tag_map(TagMap& into, const TagMap& part) {
  for (const auto& [from, to] : part) {
    auto [it, inserted] = into.emplace(from, to);
    if (!inserted && it->second != to) {
      throw GraphError("witness parts disagree on " + from.str() + ": " + it->second.str() + " vs " + to.str());
    }
  }
}

/// Caterpillar of w onto caterpillar of w': hub to hub, spine and ends by
/// position.
inline TagMap caterpillar_tag_map(const BinarySeq& w, const BinarySeq& w2) {
  if (w.length() != w2.length()) throw std::invalid_argument("caterpillar words differ in length");
  const std::size_t r = w.length();
  TagMap m;
  m.emplace(VertexTag::U(w), VertexTag::U(w2));
  for (std::size_t k = 1; k <= r - 3; ++k) m.emplace(VertexTag::Y(w, k), VertexTag::Y(w2, k));
  for (std::size_t k = 1; k <= r; ++k) m.emplace(VertexTag::Z(w, k), VertexTag::Z(w2, k));
  return m;
}

inline IsoWitness caterpillar_witness(const BinarySeq& w, const BinarySeq& w2) {
  return witness_from_tags(build_caterpillar(w), build_caterpillar(w2), caterpillar_tag_map(w, w2));
}

/// Lexicographic tree (j,h) of the even family onto (j,h) of the odd family
/// when j != i, or onto (i,1-h) when j == i, sending Z(w,j) to
/// Z(flip(w,i),j). An internal vertex at depth d goes to the depth-d
/// ancestor of the image of any leaf below it; the map is checked to be
/// well defined.
inline TagMap lex_tag_map(std::size_t r, std::size_t j, int h, std::size_t i) {
  require_leaf_count(r);
  if (i < 1 || i > r || j < 1 || j > r) throw std::invalid_argument("position out of range");
  if (h != 0 && h != 1) throw std::invalid_argument("bit must be 0 or 1");
  const int target_h = (j == i) ? 1 - h : h;
  const auto source_words = subset_ih(r, Parity::even, j, h);
  const auto target_words = subset_ih(r, Parity::odd, j, target_h);
  const std::size_t t = detail::exact_log2(source_words.size());

  std::map<BinarySeq, std::string> target_path;
  for (std::size_t k = 0; k < target_words.size(); ++k) target_path.emplace(target_words[k], detail::leaf_path(k, t));

  auto internal_tag = [&](std::size_t tree_j, int tree_h, const std::string& path) {
    return path.empty() ? VertexTag::V(tree_j, tree_h) : VertexTag::Lex(tree_j, tree_h, path);
  };

  TagMap m;
  for (std::size_t k = 0; k < source_words.size(); ++k) {
    const auto& w = source_words[k];
    const auto image = flip(w, i);
    const auto it = target_path.find(image);
    if (it == target_path.end()) throw GraphError("flipped word " + image.str() + " is not a leaf of the target tree");
    m.emplace(VertexTag::Z(w, j), VertexTag::Z(image, j));
    const auto source_path = detail::leaf_path(k, t);
    for (std::size_t d = 0; d < t; ++d) {
      const auto from = internal_tag(j, h, source_path.substr(0, d));
      const auto to = internal_tag(j, target_h, it->second.substr(0, d));
      auto [pos, inserted] = m.emplace(from, to);
      if (!inserted && pos->second != to) {
        throw GraphError("ancestor map is not well defined at " + from.str());
      }
    }
  }
  return m;
}

inline IsoWitness lex_tree_witness(std::size_t r, std::size_t j, int h, std::size_t i) {
  const int target_h = (j == i) ? 1 - h : h;
  return witness_from_tags(build_parity_lex_tree(r, Parity::even, j, h),
                           build_parity_lex_tree(r, Parity::odd, j, target_h), lex_tag_map(r, j, h, i));
}

/// The non-binary graphs with x_i removed; witness from the even to the odd
/// family.
inline LabeledMultigraph nonbinary_deck_entry(std::size_t r, Parity parity, std::size_t i) {
  return remove_label(build_nonbinary(r, parity), leaf_label(i));
}

/// U(w) -> U(flip(w,i)), V(i,0) <-> V(i,1), identity elsewhere. Valid between
/// nonbinary_deck_entry(r, even, i) and nonbinary_deck_entry(r, odd, i).
inline TagMap nonbinary_deck_tag_map(std::size_t r, std::size_t i) {
  require_leaf_count(r);
  if (i < 1 || i > r) throw std::invalid_argument("position out of range");
  TagMap m;
  for (const auto& w : enumerate_parity(r, Parity::even)) m.emplace(VertexTag::U(w), VertexTag::U(flip(w, i)));
  for (std::size_t j = 1; j <= r; ++j) {
    for (int h = 0; h <= 1; ++h) m.emplace(VertexTag::V(j, h), VertexTag::V(j, j == i ? 1 - h : h));
    m.emplace(VertexTag::X(j), VertexTag::X(j));
  }
  return m;
}

inline IsoWitness nonbinary_deck_witness(std::size_t r, std::size_t i) {
  return witness_from_tags(nonbinary_deck_entry(r, Parity::even, i), nonbinary_deck_entry(r, Parity::odd, i),
                           nonbinary_deck_tag_map(r, i));
}

/// Expanded graph with the leaf x_i deleted (its neighbour is not suppressed).
inline LabeledMultigraph expanded_minus_leaf(std::size_t r, Parity parity, std::size_t i) {
  const auto g = build_expanded(r, parity);
  const auto x = g.find_label(leaf_label(i));
  if (!x) throw std::invalid_argument("position out of range");
  return delete_vertex(g, *x);
}

/// Union of the caterpillar maps w -> flip(w,i), the lexicographic tree maps
/// and the identity on the remaining leaves.
inline TagMap expanded_deck_tag_map(std::size_t r, std::size_t i) {
  require_leaf_count(r);
  if (i < 1 || i > r) throw std::invalid_argument("position out of range");
  TagMap m;
  for (const auto& w : enumerate_parity(r, Parity::even)) merge_tag_map(m, caterpillar_tag_map(w, flip(w, i)));
  for (std::size_t j = 1; j <= r; ++j) {
    for (int h = 0; h <= 1; ++h) merge_tag_map(m, lex_tag_map(r, j, h, i));
  }
  for (std::size_t j = 1; j <= r; ++j) {
    if (j != i) m.emplace(VertexTag::X(j), VertexTag::X(j));
  }
  return m;
}

inline IsoWitness expanded_deck_witness(std::size_t r, std::size_t i) {
  return witness_from_tags(expanded_minus_leaf(r, Parity::even, i), expanded_minus_leaf(r, Parity::odd, i),
                           expanded_deck_tag_map(r, i));
}

/// Restricts a witness between two graphs to the vertices that survive
/// suppression. Suppression keeps vertex ids, so this is f(a) = f'(a).
inline IsoWitness restrict_witness(const IsoWitness& f, const LabeledMultigraph& source_suppressed) {
  IsoWitness out;
  for (const auto& v : source_suppressed.vertices()) out.mapping.emplace(v.id, f(v.id));
  return out;
}

}  // namespace leafdeck
