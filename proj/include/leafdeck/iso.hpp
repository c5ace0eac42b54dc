#pragma once

// Equivalence of labelled multigraphs: a bijection that preserves labels and
// the number of edges between every pair of vertices. Tags are ignored.
//
// The search is colour refinement seeded by (label, degree, loops) followed
// by individualisation-refinement. Edge multiplicities take part in the
// refinement signatures, so parallel edges and loops are first-class.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "leafdeck/multigraph.hpp"

namespace leafdeck {

struct IsoWitness {
  std::map<VertexId, VertexId> mapping;

  VertexId operator()(VertexId v) const {
    auto it = mapping.find(v);
    if (it == mapping.end()) throw GraphError("witness does not map vertex " + std::to_string(v));
    return it->second;
  }

  bool operator==(const IsoWitness&) const = default;
};

struct WitnessCheck {
  bool ok = true;
  std::string reason;

  explicit operator bool() const { return ok; }
};

/// Checks that f is a label- and multiplicity-preserving bijection V(G) -> V(H).
inline WitnessCheck verify_witness(const LabeledMultigraph& g, const LabeledMultigraph& h, const IsoWitness& f) {
  auto fail = [](std::string why) { return WitnessCheck{false, std::move(why)}; };
  if (g.vertex_count() != h.vertex_count()) {
    return fail("vertex counts differ: " + std::to_string(g.vertex_count()) + " vs " +
                std::to_string(h.vertex_count()));
  }
  if (f.mapping.size() != g.vertex_count()) return fail("mapping does not cover every vertex");
  std::vector<bool> hit(h.vertex_count(), false);
  for (const auto& [from, to] : f.mapping) {
    if (!g.contains(from)) return fail("mapping source " + std::to_string(from) + " is not a vertex");
    const auto k = h.find_index(to);
    if (!k) return fail("mapping target " + std::to_string(to) + " is not a vertex");
    if (hit[*k]) return fail("vertex " + std::to_string(to) + " is hit twice");
    hit[*k] = true;
    if (g.vertex(from).label != h.at_index(*k).label) {
      return fail("label mismatch at " + std::to_string(from) + " -> " + std::to_string(to));
    }
  }
  if (g.edge_count() != h.edge_count()) {
    return fail("edge counts differ: " + std::to_string(g.edge_count()) + " vs " + std::to_string(h.edge_count()));
  }
  std::vector<Edge> image;
  image.reserve(g.edge_count());
  for (const auto& e : g.edges()) image.push_back(Edge::of(f(e.a), f(e.b)));
  std::sort(image.begin(), image.end());
  const auto target = h.edges();
  for (std::size_t k = 0; k < image.size(); ++k) {
    if (image[k] != target[k]) {
      // Report the first pair whose multiplicity differs.
      for (const auto& e : g.edges()) {
        if (g.multiplicity(e.a, e.b) != h.multiplicity(f(e.a), f(e.b))) {
          return fail("edge multiplicity differs on {" + std::to_string(e.a) + "," + std::to_string(e.b) +
                      "} -> {" + std::to_string(f(e.a)) + "," + std::to_string(f(e.b)) + "}");
        }
      }
      return fail("edge multisets differ under the mapping");
    }
  }
  return {};
}

inline IsoWitness identity_witness(const LabeledMultigraph& g) {
  IsoWitness f;
  for (const auto& v : g.vertices()) f.mapping.emplace(v.id, v.id);
  return f;
}

namespace detail {

/// Joint vertex space over one or two graphs. Refinement colours are ranks of
/// isomorphism-invariant signatures, so colours are comparable across the
/// graphs and canonical within one graph.
class Refiner {
 public:
  explicit Refiner(std::vector<const LabeledMultigraph*> graphs) {
    for (std::size_t gi = 0; gi < graphs.size(); ++gi) {
      const auto& g = *graphs[gi];
      const std::size_t base = owner_.size();
      for (std::size_t k = 0; k < g.vertex_count(); ++k) {
        owner_.push_back(gi);
        local_.push_back(k);
        std::vector<std::pair<std::size_t, std::size_t>> adj;
        for (const auto& inc : g.incidences_at(k)) adj.emplace_back(base + inc.neighbor, inc.count);
        adjacency_.push_back(std::move(adj));
        seeds_.emplace_back(g.at_index(k).label.has_value(), g.at_index(k).label.value_or(std::string{}),
                            g.degree_at(k), g.loops_at(k));
      }
    }
  }

  std::size_t size() const { return owner_.size(); }
  std::size_t owner(std::size_t v) const { return owner_[v]; }
  std::size_t local(std::size_t v) const { return local_[v]; }
  const std::vector<std::pair<std::size_t, std::size_t>>& adjacency(std::size_t v) const { return adjacency_[v]; }

  std::vector<std::size_t> initial_colors() const {
    std::vector<std::size_t> order(size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return seeds_[a] < seeds_[b]; });
    std::vector<std::size_t> colors(size());
    std::size_t rank = 0;
    for (std::size_t k = 0; k < order.size(); ++k) {
      if (k > 0 && seeds_[order[k]] != seeds_[order[k - 1]]) ++rank;
      colors[order[k]] = rank;
    }
    return colors;
  }

  /// Refines to the coarsest equitable partition below `colors`.
  void refine(std::vector<std::size_t>& colors) const {
    std::size_t distinct = count_distinct(colors);
    using Signature = std::pair<std::size_t, std::vector<std::pair<std::size_t, std::size_t>>>;
    std::vector<Signature> sig(size());
    std::vector<std::size_t> order(size());
    while (true) {
      for (std::size_t v = 0; v < size(); ++v) {
        auto& s = sig[v];
        s.first = colors[v];
        s.second.clear();
        for (const auto& [w, count] : adjacency_[v]) s.second.emplace_back(colors[w], count);
        std::sort(s.second.begin(), s.second.end());
      }
      std::iota(order.begin(), order.end(), 0);
      std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return sig[a] < sig[b]; });
      std::size_t rank = 0;
      for (std::size_t k = 0; k < order.size(); ++k) {
        if (k > 0 && sig[order[k]] != sig[order[k - 1]]) ++rank;
        colors[order[k]] = rank;
      }
      const std::size_t now = size() == 0 ? 0 : rank + 1;
      if (now == distinct) return;
      distinct = now;
    }
  }

  /// Gives `chosen` vertices a colour of their own inside their common cell,
  /// ordered just after the rest of that cell.
  static void individualize(std::vector<std::size_t>& colors, const std::vector<std::size_t>& chosen) {
    for (auto& c : colors) c *= 2;
    for (auto v : chosen) colors[v] += 1;
  }

  static std::size_t count_distinct(const std::vector<std::size_t>& colors) {
    std::vector<std::size_t> sorted = colors;
    std::sort(sorted.begin(), sorted.end());
    return static_cast<std::size_t>(std::unique(sorted.begin(), sorted.end()) - sorted.begin());
  }

 private:
  std::vector<std::size_t> owner_;
  std::vector<std::size_t> local_;
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adjacency_;
  std::vector<std::tuple<bool, std::string, std::size_t, std::size_t>> seeds_;
};

/// Cells of a colouring: members grouped by colour, colours ascending.
inline std::vector<std::vector<std::size_t>> cells_of(const std::vector<std::size_t>& colors) {
  std::map<std::size_t, std::vector<std::size_t>> grouped;
  for (std::size_t v = 0; v < colors.size(); ++v) grouped[colors[v]].push_back(v);
  std::vector<std::vector<std::size_t>> out;
  out.reserve(grouped.size());
  for (auto& [c, members] : grouped) out.push_back(std::move(members));
  return out;
}

class PairSearch {
 public:
  PairSearch(const LabeledMultigraph& g, const LabeledMultigraph& h) : g_(g), h_(h), refiner_({&g, &h}) {}

  std::optional<IsoWitness> run() {
    auto colors = refiner_.initial_colors();
    refiner_.refine(colors);
    return search(colors);
  }

 private:
  bool balanced(const std::vector<std::vector<std::size_t>>& cells) const {
    for (const auto& cell : cells) {
      std::size_t left = 0;
      for (auto v : cell) left += refiner_.owner(v) == 0 ? 1 : 0;
      if (2 * left != cell.size()) return false;
    }
    return true;
  }

  std::optional<IsoWitness> search(const std::vector<std::size_t>& colors) {
    const auto cells = cells_of(colors);
    if (!balanced(cells)) return std::nullopt;

    const std::vector<std::size_t>* target = nullptr;
    for (const auto& cell : cells) {
      if (cell.size() > 2 && (target == nullptr || cell.size() < target->size())) target = &cell;
    }
    if (target == nullptr) {
      IsoWitness f;
      for (const auto& cell : cells) {
        const auto a = refiner_.owner(cell[0]) == 0 ? cell[0] : cell[1];
        const auto b = refiner_.owner(cell[0]) == 0 ? cell[1] : cell[0];
        f.mapping.emplace(g_.at_index(refiner_.local(a)).id, h_.at_index(refiner_.local(b)).id);
      }
      if (verify_witness(g_, h_, f)) return f;
      return std::nullopt;
    }

    std::size_t pivot = target->front();
    for (auto v : *target) {
      if (refiner_.owner(v) == 0) {
        pivot = v;
        break;
      }
    }
    for (auto candidate : *target) {
      if (refiner_.owner(candidate) != 1) continue;
      auto next = colors;
      Refiner::individualize(next, {pivot, candidate});
      refiner_.refine(next);
      if (auto found = search(next)) return found;
    }
    return std::nullopt;
  }

  const LabeledMultigraph& g_;
  const LabeledMultigraph& h_;
  Refiner refiner_;
};

inline bool same_shape(const LabeledMultigraph& g, const LabeledMultigraph& h) {
  if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count()) return false;
  return g.labels() == h.labels();
}

/// Canonical labelling by individualisation-refinement, keeping the smallest
/// certificate over the search tree. Automorphisms discovered at equal leaves
/// prune siblings in the same orbit of the pointwise stabiliser of the
/// current prefix.
class CanonicalSearch {
 public:
  explicit CanonicalSearch(const LabeledMultigraph& g) : g_(g), refiner_({&g}) {}

  std::string run() {
    auto colors = refiner_.initial_colors();
    refiner_.refine(colors);
    std::vector<std::size_t> prefix;
    search(colors, prefix);
    return best_;
  }

 private:
  std::string certificate(const std::vector<std::size_t>& colors) const {
    // colors is discrete here: colors[v] is the canonical position of v.
    const std::size_t n = colors.size();
    std::vector<std::size_t> at(n);
    for (std::size_t v = 0; v < n; ++v) at[colors[v]] = v;
    std::string out = "n=" + std::to_string(n) + ";labels=";
    for (std::size_t p = 0; p < n; ++p) {
      const auto& label = g_.at_index(at[p]).label;
      if (label) out += std::to_string(p) + ":" + *label + "\x1f";
    }
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (const auto& e : g_.edges()) {
      auto a = colors[g_.index_of(e.a)];
      auto b = colors[g_.index_of(e.b)];
      if (a > b) std::swap(a, b);
      edges.emplace_back(a, b);
    }
    std::sort(edges.begin(), edges.end());
    out += ";edges=";
    for (const auto& [a, b] : edges) out += std::to_string(a) + "-" + std::to_string(b) + ",";
    return out;
  }

  void record_leaf(const std::vector<std::size_t>& colors) {
    auto cert = certificate(colors);
    if (!have_best_ || cert < best_) {
      best_ = std::move(cert);
      best_colors_ = colors;
      have_best_ = true;
    } else if (cert == best_) {
      // colors and best_colors_ both place the graph identically: the map
      // v -> (vertex at best position colors[v]) is an automorphism.
      const std::size_t n = colors.size();
      std::vector<std::size_t> at_best(n);
      for (std::size_t v = 0; v < n; ++v) at_best[best_colors_[v]] = v;
      std::vector<std::size_t> gamma(n);
      for (std::size_t v = 0; v < n; ++v) gamma[v] = at_best[colors[v]];
      automorphisms_.push_back(std::move(gamma));
    }
  }

  std::vector<std::size_t> orbit_roots(const std::vector<std::size_t>& prefix) const {
    const std::size_t n = refiner_.size();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t v) {
      while (parent[v] != v) v = parent[v] = parent[parent[v]];
      return v;
    };
    for (const auto& gamma : automorphisms_) {
      bool fixes = true;
      for (auto p : prefix) {
        if (gamma[p] != p) {
          fixes = false;
          break;
        }
      }
      if (!fixes) continue;
      for (std::size_t v = 0; v < n; ++v) {
        const auto a = find(v), b = find(gamma[v]);
        if (a != b) parent[a] = b;
      }
    }
    std::vector<std::size_t> roots(n);
    for (std::size_t v = 0; v < n; ++v) roots[v] = find(v);
    return roots;
  }

  void search(const std::vector<std::size_t>& colors, std::vector<std::size_t>& prefix) {
    const auto cells = cells_of(colors);
    const std::vector<std::size_t>* target = nullptr;
    for (const auto& cell : cells) {
      if (cell.size() > 1 && (target == nullptr || cell.size() < target->size())) target = &cell;
    }
    if (target == nullptr) {
      record_leaf(colors);
      return;
    }
    const auto cell = *target;
    // Members of `cell` already handled, directly or through an orbit.
    std::vector<std::size_t> done;
    for (auto v : cell) {
      if (!done.empty()) {
        const auto roots = orbit_roots(prefix);
        const bool covered = std::any_of(done.begin(), done.end(),
                                         [&](std::size_t u) { return roots[u] == roots[v]; });
        if (covered) continue;
      }
      auto next = colors;
      Refiner::individualize(next, {v});
      refiner_.refine(next);
      prefix.push_back(v);
      search(next, prefix);
      prefix.pop_back();
      done.push_back(v);
    }
  }

  const LabeledMultigraph& g_;
  Refiner refiner_;
  std::string best_;
  std::vector<std::size_t> best_colors_;
  bool have_best_ = false;
  std::vector<std::vector<std::size_t>> automorphisms_;
};

}  // namespace detail

/// Returns a witness when g and h are equivalent. Deterministic for fixed
/// inputs.
inline std::optional<IsoWitness> are_equivalent(const LabeledMultigraph& g, const LabeledMultigraph& h) {
  if (!detail::same_shape(g, h)) return std::nullopt;
  if (g.vertex_count() == 0) return IsoWitness{};
  return detail::PairSearch(g, h).run();
}

/// Byte string equal for two graphs exactly when they are equivalent.
struct CanonicalForm {
  std::string bytes;

  bool operator==(const CanonicalForm&) const = default;
  auto operator<=>(const CanonicalForm&) const = default;
};

inline CanonicalForm canonical_form(const LabeledMultigraph& g) {
  return {detail::CanonicalSearch(g).run()};
}

/// Vertex cap for the brute-force oracle; LEAFDECK_MAX_BRUTE_FORCE overrides
/// the default of 10.
inline std::size_t brute_force_cap() {
  if (const char* env = std::getenv("LEAFDECK_MAX_BRUTE_FORCE")) {
    char* end = nullptr;
    const auto value = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && value > 0) return static_cast<std::size_t>(value);
  }
  return 10;
}

/// Exhaustive search over label-consistent bijections. Test oracle only.
inline bool brute_force_equivalent(const LabeledMultigraph& g, const LabeledMultigraph& h,
                                   std::size_t cap = brute_force_cap()) {
  const std::size_t n = g.vertex_count();
  if (n > cap || h.vertex_count() > cap) {
    throw GraphError("brute force limited to " + std::to_string(cap) + " vertices");
  }
  if (n != h.vertex_count() || g.edge_count() != h.edge_count()) return false;

  auto matrix = [](const LabeledMultigraph& x) {
    const std::size_t m = x.vertex_count();
    std::vector<std::size_t> mult(m * m, 0);
    for (const auto& e : x.edges()) {
      const auto a = x.index_of(e.a), b = x.index_of(e.b);
      ++mult[a * m + b];
      if (a != b) ++mult[b * m + a];
    }
    return mult;
  };
  const auto mg = matrix(g);
  const auto mh = matrix(h);
  std::vector<std::size_t> image(n);
  std::vector<bool> used(n, false);

  auto extend = [&](auto&& self, std::size_t k) -> bool {
    if (k == n) return true;
    for (std::size_t t = 0; t < n; ++t) {
      if (used[t] || g.at_index(k).label != h.at_index(t).label) continue;
      bool consistent = mg[k * n + k] == mh[t * n + t];
      for (std::size_t j = 0; consistent && j < k; ++j) {
        consistent = mg[k * n + j] == mh[t * n + image[j]];
      }
      if (!consistent) continue;
      used[t] = true;
      image[k] = t;
      if (self(self, k + 1)) return true;
      used[t] = false;
    }
    return false;
  };
  return extend(extend, 0);
}

}  // namespace leafdeck
