#pragma once

// Mechanical re-verification of the counterexample family. Each battery
// checks one (r) instance of all three variants in both parities; wherever an
// explicit witness exists it is validated and an independent isomorphism
// search must agree.

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <future>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "leafdeck/construct.hpp"
#include "leafdeck/deck.hpp"
#include "leafdeck/distance.hpp"
#include "leafdeck/iso.hpp"
#include "leafdeck/network.hpp"
#include "leafdeck/structure.hpp"

namespace leafdeck {

/// All six graphs for one r. Checks read only from here, so a test can
/// perturb any member and rerun the battery.
struct Family {
  std::size_t r = 0;
  LabeledMultigraph nonbinary_even, nonbinary_odd;
  LabeledMultigraph expanded_even, expanded_odd;
  LabeledMultigraph binary_even, binary_odd;

  static Family build(std::size_t r) {
    Family f;
    f.r = r;
    f.nonbinary_even = build_nonbinary(r, Parity::even);
    f.nonbinary_odd = build_nonbinary(r, Parity::odd);
    f.expanded_even = build_expanded(r, Parity::even);
    f.expanded_odd = build_expanded(r, Parity::odd);
    f.binary_even = suppress_degree_two(f.expanded_even);
    f.binary_odd = suppress_degree_two(f.expanded_odd);
    return f;
  }

  LabeledMultigraph& member(Variant v, Parity p) {
    switch (v) {
      case Variant::nonbinary:
        return p == Parity::even ? nonbinary_even : nonbinary_odd;
      case Variant::expanded:
        return p == Parity::even ? expanded_even : expanded_odd;
      case Variant::binary:
        break;
    }
    return p == Parity::even ? binary_even : binary_odd;
  }
};

struct CheckResult {
  std::size_t r = 0;
  std::string name;
  std::string claim;
  bool passed = false;
  std::string detail;
  double millis = 0.0;
};

/// |E| - |V| of the constructed networks next to the two closed forms.
struct ExcessRow {
  std::size_t r = 0;
  std::int64_t binary_even = 0;
  std::int64_t binary_odd = 0;
  std::int64_t expanded_even = 0;
  std::int64_t component_sum = 0;  // 2^(r-1) (r-1) - 2r
  std::int64_t closing_formula = 0;  // (2^(r-1) - 1)(2r - 1) - 1
  bool matches_closing_formula = false;
};

struct VerificationReport {
  std::size_t r_min = 0;
  std::size_t r_max = 0;
  std::vector<CheckResult> checks;
  std::vector<ExcessRow> excess;

  bool passed() const {
    for (const auto& c : checks) {
      if (!c.passed) return false;
    }
    return !checks.empty();
  }

  const CheckResult* find(std::size_t r, const std::string& name) const {
    for (const auto& c : checks) {
      if (c.r == r && c.name == name) return &c;
    }
    return nullptr;
  }
};

/// Thrown by a check body to fail with a message.
class CheckFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline void expect(bool condition, const std::string& message) {
  if (!condition) throw CheckFailure(message);
}

/// Runs a check body; exceptions of any kind count as failure.
inline CheckResult run_check(std::size_t r, std::string name, std::string claim,
                             const std::function<std::string()>& body) {
  CheckResult result{r, std::move(name), std::move(claim), false, {}, 0.0};
  const auto start = std::chrono::steady_clock::now();
  try {
    result.detail = body();
    result.passed = true;
  } catch (const std::exception& e) {
    result.detail = e.what();
  }
  result.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return result;
}

inline VertexId require_tagged(const LabeledMultigraph& g, const VertexTag& tag) {
  auto v = g.find_tag(tag);
  expect(v.has_value(), "no vertex tagged " + tag.str());
  return *v;
}

inline VertexId require_label(const LabeledMultigraph& g, const std::string& label) {
  auto v = g.find_label(label);
  expect(v.has_value(), "no vertex labelled " + label);
  return *v;
}

inline BinarySeq zero_word(std::size_t r) { return BinarySeq(r); }

/// Lexicographically smallest word of the parity starting with (a, b).
inline BinarySeq first_word_with_prefix(std::size_t r, Parity parity, int a, int b) {
  for (const auto& w : enumerate_parity(r, parity)) {
    if (w(1) == a && w(2) == b) return w;
  }
  throw CheckFailure("no word with the requested prefix");
}

}  // namespace detail

/// Shortest path from `from` to `to` using only vertices accepted by `allowed`
/// (endpoints always allowed).
inline std::vector<VertexId> restricted_path(const LabeledMultigraph& g, VertexId from, VertexId to,
                                             const std::function<bool(const Vertex&)>& allowed) {
  const auto n = g.vertex_count();
  const auto target = g.index_of(to);
  std::vector<std::size_t> parent(n, n);
  std::vector<std::size_t> queue{g.index_of(from)};
  parent[queue.front()] = queue.front();
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const auto k = queue[head];
    if (k == target) break;
    for (const auto& inc : g.incidences_at(k)) {
      const auto m = inc.neighbor;
      if (parent[m] != n) continue;
      if (m != target && !allowed(g.at_index(m))) continue;
      parent[m] = k;
      queue.push_back(m);
    }
  }
  if (parent[target] == n) return {};
  std::vector<VertexId> path;
  for (auto k = target;; k = parent[k]) {
    path.push_back(g.at_index(k).id);
    if (parent[k] == k) break;
  }
  std::reverse(path.begin(), path.end());
  return path;
}

/// The four-caterpillar cycle through the hubs of the smallest words with
/// prefixes 00, 01, 11, 10, routed through the lexicographic trees (1,0),
/// (2,1), (1,1), (2,0). Returns the closed vertex sequence (first vertex
/// repeated at the end) or throws CheckFailure.
inline std::vector<VertexId> four_caterpillar_cycle(const LabeledMultigraph& g, std::size_t r, Parity parity) {
  using detail::require_tagged;
  const auto w00 = detail::first_word_with_prefix(r, parity, 0, 0);
  const auto w01 = detail::first_word_with_prefix(r, parity, 0, 1);
  const auto w11 = detail::first_word_with_prefix(r, parity, 1, 1);
  const auto w10 = detail::first_word_with_prefix(r, parity, 1, 0);

  auto in_tree = [](std::size_t i, int h) {
    return [i, h](const Vertex& v) {
      return (v.tag.role == Role::lex_internal || v.tag.role == Role::v) && v.tag.index == i && v.tag.bit == h;
    };
  };
  struct Leg {
    BinarySeq from;
    BinarySeq to;
    std::size_t position;
    int bit;
  };
  const std::vector<Leg> legs = {{w00, w01, 1, 0}, {w01, w11, 2, 1}, {w11, w10, 1, 1}, {w10, w00, 2, 0}};

  std::vector<VertexId> cycle;
  for (const auto& leg : legs) {
    cycle.push_back(require_tagged(g, VertexTag::U(leg.from)));
    const auto a = require_tagged(g, VertexTag::Z(leg.from, leg.position));
    const auto b = require_tagged(g, VertexTag::Z(leg.to, leg.position));
    const auto through = restricted_path(g, a, b, in_tree(leg.position, leg.bit));
    detail::expect(!through.empty(), "no path between " + VertexTag::Z(leg.from, leg.position).str() + " and " +
                                         VertexTag::Z(leg.to, leg.position).str() + " inside the tree");
    cycle.insert(cycle.end(), through.begin(), through.end());
  }
  cycle.push_back(cycle.front());
  return cycle;
}

/// Closed walk with distinct vertices, at least three of them, every
/// consecutive pair adjacent.
inline bool is_simple_cycle(const LabeledMultigraph& g, const std::vector<VertexId>& closed) {
  if (closed.size() < 4 || closed.front() != closed.back()) return false;
  std::vector<VertexId> distinct(closed.begin(), closed.end() - 1);
  std::sort(distinct.begin(), distinct.end());
  if (std::adjacent_find(distinct.begin(), distinct.end()) != distinct.end()) return false;
  for (std::size_t k = 0; k + 1 < closed.size(); ++k) {
    if (!g.contains(closed[k]) || g.multiplicity(closed[k], closed[k + 1]) == 0) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Batteries

inline std::vector<CheckResult> check_nonbinary_pair(const Family& f) {
  using namespace detail;
  const auto r = f.r;
  const auto& even = f.nonbinary_even;
  const auto& odd = f.nonbinary_odd;
  std::vector<CheckResult> out;

  out.push_back(run_check(r, "nonbinary.not_equivalent", "M(even) and M(odd) are not equivalent", [&] {
    expect(!are_equivalent(even, odd).has_value(), "isomorphism search found a witness");
    expect(canonical_form(even) != canonical_form(odd), "canonical forms coincide");
    return std::string("search finds no witness; canonical forms differ");
  }));

  out.push_back(run_check(r, "nonbinary.hub_distance_two",
                          "U(0..0) in M(even) is at distance 2 from every leaf; no vertex of M(odd) is", [&] {
    const auto hub = require_tagged(even, VertexTag::U(zero_word(r)));
    const auto sig = distance_signature(even, hub);
    for (const auto& [label, d] : sig.entries) {
      expect(d && *d == 2, "distance to " + label + " is not 2");
    }
    expect(sig.entries.size() == r, "signature does not cover every leaf");
    const auto matches = vertices_with_signature(odd, sig);
    expect(matches.empty(), "vertex " + (matches.empty() ? std::string() : std::to_string(matches.front())) +
                                " of M(odd) has the all-2 signature");
    return "signature " + sig.str() + " absent from M(odd)";
  }));

  out.push_back(run_check(r, "nonbinary.deck_equivalence",
                          "for every i, M(even) - x_i and M(odd) - x_i are equivalent (flip map and search)", [&] {
    for (std::size_t i = 1; i <= r; ++i) {
      const auto a = remove_label(even, leaf_label(i));
      const auto b = remove_label(odd, leaf_label(i));
      const auto f_map = witness_from_tags(a, b, nonbinary_deck_tag_map(r, i));
      const auto check = verify_witness(a, b, f_map);
      expect(check.ok, "flip map fails at i=" + std::to_string(i) + ": " + check.reason);
      expect(are_equivalent(a, b).has_value(), "search finds no witness at i=" + std::to_string(i));
    }
    return "flip map verified and confirmed by search for i = 1.." + std::to_string(r);
  }));
  return out;
}

inline CheckResult check_blob_cycle(const LabeledMultigraph& g, std::size_t r, Parity parity) {
  using namespace detail;
  const std::string name = std::string("expanded.single_blob.") + std::string(to_string(parity));
  return run_check(r, name, "all non-leaf vertices of G(" + std::string(to_string(parity)) +
                                ") lie in one blob, witnessed by the four-caterpillar cycle", [&] {
    const auto parts = blob_decomposition(g);
    std::size_t blob_count = 0;
    std::optional<std::size_t> blob_index;
    for (std::size_t c = 0; c < parts.components.size(); ++c) {
      if (parts.components[c].is_blob) {
        ++blob_count;
        blob_index = c;
      }
    }
    expect(blob_count == 1, std::to_string(blob_count) + " blobs instead of one");
    for (std::size_t k = 0; k < g.vertex_count(); ++k) {
      const bool leaf = g.degree_at(k) == 1;
      const bool inside = parts.component_of[k] == *blob_index;
      expect(leaf != inside, "vertex " + std::to_string(g.at_index(k).id) +
                                 (leaf ? " is a leaf inside the blob" : " is a non-leaf outside the blob"));
    }
    const auto cycle = four_caterpillar_cycle(g, r, parity);
    expect(is_simple_cycle(g, cycle), "four-caterpillar walk is not a simple cycle");
    std::string hubs;
    for (auto id : cycle) {
      if (g.vertex(id).tag.role == Role::u) hubs += (hubs.empty() ? "" : ",") + g.vertex(id).tag.word.str();
    }
    return "one blob; cycle of length " + std::to_string(cycle.size() - 1) + " through hubs " + hubs;
  });
}

inline std::vector<CheckResult> check_expanded_pair(const Family& f) {
  using namespace detail;
  const auto r = f.r;
  const auto& even = f.expanded_even;
  const auto& odd = f.expanded_odd;
  std::vector<CheckResult> out;

  out.push_back(run_check(r, "expanded.degrees",
                          "Z and V(i,1) vertices have degree 2, every other non-leaf vertex degree 3", [&] {
    for (const auto* g : {&even, &odd}) {
      for (std::size_t k = 0; k < g->vertex_count(); ++k) {
        const auto& v = g->at_index(k);
        const auto d = g->degree_at(k);
        std::size_t want = 3;
        if (v.label) want = 1;
        if (v.tag.role == Role::z || (v.tag.role == Role::v && v.tag.bit == 1)) want = 2;
        expect(d == want, "vertex " + v.tag.str() + " has degree " + std::to_string(d));
      }
    }
    return std::string("degree pattern holds in both parities");
  }));

  out.push_back(run_check(r, "expanded.hub_distance", "U(0..0) in G(even) is at distance r from x1", [&] {
    const auto hub = require_tagged(even, VertexTag::U(zero_word(r)));
    const auto d = distance(even, hub, require_label(even, leaf_label(1)));
    expect(d && *d == r, "distance is " + (d ? std::to_string(*d) : std::string("inf")));
    return "distance " + std::to_string(*d);
  }));

  out.push_back(run_check(r, "expanded.not_equivalent",
                          "no vertex of G(odd) has the leaf-distance signature of U(0..0) in G(even)", [&] {
    const auto hub = require_tagged(even, VertexTag::U(zero_word(r)));
    const auto sig = distance_signature(even, hub);
    expect(vertices_with_signature(odd, sig).empty(), "signature " + sig.str() + " occurs in G(odd)");
    // Any vertex of G(odd) at the hub's distance from x1 must be a hub.
    const auto d1 = sig.at(leaf_label(1));
    const auto all = all_signatures(odd);
    for (std::size_t k = 0; k < odd.vertex_count(); ++k) {
      if (all[k].at(leaf_label(1)) == d1) {
        expect(odd.at_index(k).tag.role == Role::u, "non-hub " + odd.at_index(k).tag.str() + " at hub distance");
      }
    }
    expect(!are_equivalent(even, odd).has_value(), "isomorphism search found a witness");
    return "separator " + sig.str() + "; search agrees";
  }));

  out.push_back(run_check(r, "expanded.deck_witness",
                          "for every i, G(even) - x_i and G(odd) - x_i are equivalent (composed witness and search)",
                          [&] {
    for (std::size_t i = 1; i <= r; ++i) {
      const auto a = delete_vertex(even, require_label(even, leaf_label(i)));
      const auto b = delete_vertex(odd, require_label(odd, leaf_label(i)));
      const auto f_map = witness_from_tags(a, b, expanded_deck_tag_map(r, i));
      const auto check = verify_witness(a, b, f_map);
      expect(check.ok, "composed witness fails at i=" + std::to_string(i) + ": " + check.reason);
      expect(are_equivalent(a, b).has_value(), "search finds no witness at i=" + std::to_string(i));
    }
    return "composed witness verified and confirmed by search for i = 1.." + std::to_string(r);
  }));

  out.push_back(check_blob_cycle(even, r, Parity::even));
  out.push_back(check_blob_cycle(odd, r, Parity::odd));
  return out;
}

inline std::int64_t component_sum_excess(std::size_t r) {
  return (std::int64_t{1} << (r - 1)) * static_cast<std::int64_t>(r - 1) - 2 * static_cast<std::int64_t>(r);
}

inline std::int64_t closing_formula_excess(std::size_t r) {
  return ((std::int64_t{1} << (r - 1)) - 1) * (2 * static_cast<std::int64_t>(r) - 1) - 1;
}

inline ExcessRow excess_row(const Family& f) {
  ExcessRow row;
  row.r = f.r;
  row.binary_even = f.binary_even.excess();
  row.binary_odd = f.binary_odd.excess();
  row.expanded_even = f.expanded_even.excess();
  row.component_sum = component_sum_excess(f.r);
  row.closing_formula = closing_formula_excess(f.r);
  row.matches_closing_formula = row.binary_even == row.closing_formula;
  return row;
}

inline std::vector<CheckResult> check_binary_pair(const Family& f) {
  using namespace detail;
  const auto r = f.r;
  const auto& even = f.binary_even;
  const auto& odd = f.binary_odd;
  const auto labels = leaf_labels(r);
  std::vector<CheckResult> out;

  out.push_back(run_check(r, "binary.is_network", "N(even) and N(odd) are binary networks on {x1..xr}", [&] {
    for (const auto* g : {&even, &odd}) {
      const auto check = is_network(*g, labels);
      expect(check.ok, check.reason);
      expect(is_binary(*g), "a vertex has degree other than 1 or 3");
    }
    return std::string("both valid and binary");
  }));

  out.push_back(run_check(r, "binary.hub_signature",
                          "no vertex of N(odd) has the leaf-distance signature of U(0..0) in N(even)", [&] {
    const auto hub = require_tagged(even, VertexTag::U(zero_word(r)));
    const auto sig = distance_signature(even, hub);
    const auto matches = vertices_with_signature(odd, sig);
    expect(matches.empty(), "signature " + sig.str() + " occurs in N(odd)");
    return "separator " + sig.str();
  }));

  out.push_back(run_check(r, "binary.not_equivalent", "N(even) and N(odd) are not equivalent", [&] {
    expect(!are_equivalent(even, odd).has_value(), "isomorphism search found a witness");
    expect(canonical_form(even) != canonical_form(odd), "canonical forms coincide");
    return std::string("search finds no witness; canonical forms differ");
  }));

  out.push_back(run_check(r, "binary.deck_equivalence",
                          "for every i, the x_i deck entries of N(even) and N(odd) are equivalent "
                          "(witness pushed through suppression and search)",
                          [&] {
    for (std::size_t i = 1; i <= r; ++i) {
      const auto a = remove_label(even, leaf_label(i));
      const auto b = remove_label(odd, leaf_label(i));
      const auto ga = delete_vertex(f.expanded_even, require_label(f.expanded_even, leaf_label(i)));
      const auto gb = delete_vertex(f.expanded_odd, require_label(f.expanded_odd, leaf_label(i)));
      const auto lifted = witness_from_tags(ga, gb, expanded_deck_tag_map(r, i));
      const auto pushed = restrict_witness(lifted, a);
      const auto check = verify_witness(a, b, pushed);
      expect(check.ok, "pushed witness fails at i=" + std::to_string(i) + ": " + check.reason);
      expect(are_equivalent(a, b).has_value(), "search finds no witness at i=" + std::to_string(i));
    }
    return "pushed witness verified and confirmed by search for i = 1.." + std::to_string(r);
  }));

  out.push_back(run_check(r, "binary.certificate",
                          "N(odd) is a leaf-reconstruction of N(even) and not equivalent to it", [&] {
    const auto first = Network::from(even, labels);
    const auto second = Network::from(odd, labels);
    const auto cert = certify_not_leaf_reconstructible(first, second);
    expect(cert.separator.has_value(), "no distance-signature separator");
    expect(separator_holds(even, odd, *cert.separator), "separator does not re-check");
    for (const auto& [label, w] : cert.deck_witnesses) {
      expect(verify_witness(remove_label(odd, label), remove_label(even, label), w).ok,
             "deck witness for " + label + " does not re-check");
    }
    return "certificate with " + std::to_string(cert.deck_witnesses.size()) + " deck witnesses; separator at " +
           even.vertex(cert.separator->vertex).tag.str() + " " + cert.separator->signature.str();
  }));

  out.push_back(run_check(r, "binary.excess",
                          "|E|-|V| agrees across parities, with the expanded graph and with 2^(r-1)(r-1)-2r", [&] {
    const auto row = excess_row(f);
    expect(row.binary_even == row.binary_odd, "parities differ");
    expect(row.binary_even == row.expanded_even, "suppression changed |E|-|V|");
    expect(row.binary_even == row.component_sum, "differs from the component-sum count");
    return "|E|-|V| = " + std::to_string(row.binary_even) + " (closing formula gives " +
           std::to_string(row.closing_formula) + (row.matches_closing_formula ? ", equal)" : ", differs; informational)");
  }));
  return out;
}

inline std::vector<CheckResult> run_battery(const Family& f) {
  auto out = check_nonbinary_pair(f);
  for (auto& c : check_expanded_pair(f)) out.push_back(std::move(c));
  for (auto& c : check_binary_pair(f)) out.push_back(std::move(c));
  return out;
}

/// Replaces one edge {a,b} by {a,c}, c outside {a,b}. Returns the edge
/// before and after.
inline std::pair<Edge, Edge> rewire_random_edge(LabeledMultigraph& g, std::mt19937_64& rng) {
  if (g.edge_count() == 0 || g.vertex_count() < 3) throw std::invalid_argument("graph too small to rewire");
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  const auto pick = std::uniform_int_distribution<std::size_t>(0, edges.size() - 1)(rng);
  const Edge old = edges[pick];
  const bool keep_a = std::uniform_int_distribution<int>(0, 1)(rng) == 0;
  const VertexId anchor = keep_a ? old.a : old.b;
  VertexId fresh = anchor;
  while (fresh == old.a || fresh == old.b) {
    const auto k = std::uniform_int_distribution<std::size_t>(0, g.vertex_count() - 1)(rng);
    fresh = g.at_index(k).id;
  }
  const Edge replacement = Edge::of(anchor, fresh);
  edges[pick] = replacement;
  g = LabeledMultigraph::build({g.vertices().begin(), g.vertices().end()}, std::move(edges));
  return {old, replacement};
}

struct NegativeControlOutcome {
  std::size_t trials = 0;
  std::size_t caught = 0;
  std::vector<std::string> missed;  // rewirings no check noticed
};

/// Rewires one random edge of the chosen member per trial and reruns the
/// battery; a trial is caught when at least one check fails.
inline NegativeControlOutcome run_negative_controls(const Family& base, Variant variant, Parity parity,
                                                    std::size_t trials, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  NegativeControlOutcome out;
  for (std::size_t t = 0; t < trials; ++t) {
    Family mutated = base;
    const auto [before, after] = rewire_random_edge(mutated.member(variant, parity), rng);
    std::vector<CheckResult> results;
    switch (variant) {
      case Variant::nonbinary:
        results = check_nonbinary_pair(mutated);
        break;
      case Variant::expanded:
        results = check_expanded_pair(mutated);
        break;
      case Variant::binary:
        results = check_binary_pair(mutated);
        break;
    }
    ++out.trials;
    const bool caught = std::any_of(results.begin(), results.end(), [](const CheckResult& c) { return !c.passed; });
    if (caught) {
      ++out.caught;
    } else {
      out.missed.push_back("{" + std::to_string(before.a) + "," + std::to_string(before.b) + "} -> {" +
                           std::to_string(after.a) + "," + std::to_string(after.b) + "}");
    }
  }
  return out;
}

struct MatrixOptions {
  std::size_t negative_controls = 0;  // trials per r, applied to N(even)
  std::uint64_t seed = 1;
  bool parallel = false;
};

inline std::vector<CheckResult> run_for_r(std::size_t r, const MatrixOptions& options, ExcessRow& row) {
  const auto family = Family::build(r);
  auto checks = run_battery(family);
  row = excess_row(family);
  if (options.negative_controls > 0) {
    checks.push_back(detail::run_check(r, "negative_controls",
                                       "every single-edge rewiring of N(even) is caught by some check", [&] {
      const auto outcome =
          run_negative_controls(family, Variant::binary, Parity::even, options.negative_controls, options.seed + r);
      detail::expect(outcome.caught == outcome.trials,
                     std::to_string(outcome.trials - outcome.caught) + " rewirings missed, first " +
                         (outcome.missed.empty() ? std::string() : outcome.missed.front()));
      return "caught " + std::to_string(outcome.caught) + "/" + std::to_string(outcome.trials);
    }));
  }
  return checks;
}

/// All batteries for r_min..r_max, ordered by r and then battery order.
inline VerificationReport run_matrix(std::size_t r_min, std::size_t r_max, const MatrixOptions& options = {}) {
  if (r_min < 4 || r_max < r_min) {
    throw std::invalid_argument("run_matrix needs 4 <= r_min <= r_max, got " + std::to_string(r_min) + ".." +
                                std::to_string(r_max));
  }
  VerificationReport report;
  report.r_min = r_min;
  report.r_max = r_max;
  const std::size_t count = r_max - r_min + 1;
  std::vector<std::vector<CheckResult>> per_r(count);
  report.excess.resize(count);
  if (options.parallel) {
    std::vector<std::future<std::vector<CheckResult>>> jobs;
    for (std::size_t k = 0; k < count; ++k) {
      jobs.push_back(std::async(std::launch::async, [&, k] { return run_for_r(r_min + k, options, report.excess[k]); }));
    }
    for (std::size_t k = 0; k < count; ++k) per_r[k] = jobs[k].get();
  } else {
    for (std::size_t k = 0; k < count; ++k) per_r[k] = run_for_r(r_min + k, options, report.excess[k]);
  }
  for (auto& part : per_r) {
    for (auto& c : part) report.checks.push_back(std::move(c));
  }
  return report;
}

}  // namespace leafdeck
