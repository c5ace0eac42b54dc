#pragma once

// Leaf decks and reconstruction predicates.

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "leafdeck/distance.hpp"
#include "leafdeck/iso.hpp"
#include "leafdeck/multigraph.hpp"
#include "leafdeck/network.hpp"
#include "leafdeck/structure.hpp"

namespace leafdeck {

/// Removal result for every label, keyed by label.
using Deck = std::map<std::string, LabeledMultigraph, NaturalLess>;

inline Deck x_deck(const LabeledMultigraph& g) {
  Deck deck;
  for (const auto& label : g.labels()) deck.emplace(label, remove_label(g, label));
  return deck;
}

inline Deck x_deck(const Network& n) { return x_deck(n.graph()); }

class CertificationError : public std::runtime_error {
 public:
  enum class Kind { label_sets_differ, networks_equivalent, deck_mismatch };

  CertificationError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

inline void require_same_labels(const Network& a, const Network& b) {
  if (a.labels() != b.labels()) {
    throw CertificationError(CertificationError::Kind::label_sets_differ, "networks have different label sets");
  }
}

/// Per-label witnesses between two decks; nullopt at the first label whose
/// entries are not equivalent.
inline std::optional<std::map<std::string, IsoWitness, NaturalLess>> deck_witnesses(const Deck& a, const Deck& b) {
  if (a.size() != b.size()) return std::nullopt;
  std::map<std::string, IsoWitness, NaturalLess> out;
  for (const auto& [label, entry] : a) {
    auto other = b.find(label);
    if (other == b.end()) return std::nullopt;
    auto f = are_equivalent(entry, other->second);
    if (!f) return std::nullopt;
    out.emplace(label, std::move(*f));
  }
  return out;
}

/// True when every deck entry of `candidate` is equivalent to the entry of
/// `original` with the same label.
inline bool is_reconstruction(const Network& candidate, const Network& original) {
  require_same_labels(candidate, original);
  return deck_witnesses(x_deck(candidate), x_deck(original)).has_value();
}

/// Auditable non-equivalence: a vertex of one network whose distance
/// signature no vertex of the other network has.
struct SignatureSeparator {
  VertexId vertex;
  DistanceSignature signature;
};

/// First vertex of `a` (by id, preferring tagged hubs) whose signature does
/// not occur in `b`.
inline std::optional<SignatureSeparator> find_signature_separator(const LabeledMultigraph& a,
                                                                  const LabeledMultigraph& b) {
  const auto in_a = all_signatures(a);
  auto in_b = all_signatures(b);
  std::sort(in_b.begin(), in_b.end());
  std::optional<SignatureSeparator> fallback;
  for (std::size_t k = 0; k < a.vertex_count(); ++k) {
    if (std::binary_search(in_b.begin(), in_b.end(), in_a[k])) continue;
    SignatureSeparator s{a.at_index(k).id, in_a[k]};
    if (a.at_index(k).tag.role == Role::u) return s;
    if (!fallback) fallback = std::move(s);
  }
  return fallback;
}

/// Checks a separator against both graphs from scratch.
inline bool separator_holds(const LabeledMultigraph& a, const LabeledMultigraph& b, const SignatureSeparator& s) {
  if (!a.contains(s.vertex) || distance_signature(a, s.vertex) != s.signature) return false;
  return vertices_with_signature(b, s.signature).empty();
}

struct NonReconstructibilityCertificate {
  std::map<std::string, IsoWitness, NaturalLess> deck_witnesses;
  std::optional<SignatureSeparator> separator;
  CanonicalForm first_form;
  CanonicalForm second_form;
};

/// Succeeds when `second` is a reconstruction of `first` but the two are not
/// equivalent, which shows `first` is not leaf-reconstructible. Throws
/// CertificationError naming the failed condition otherwise.
inline NonReconstructibilityCertificate certify_not_leaf_reconstructible(const Network& first, const Network& second) {
  require_same_labels(first, second);
  if (are_equivalent(first.graph(), second.graph())) {
    throw CertificationError(CertificationError::Kind::networks_equivalent, "networks are equivalent");
  }
  NonReconstructibilityCertificate cert;
  auto witnesses = deck_witnesses(x_deck(second), x_deck(first));
  if (!witnesses) {
    throw CertificationError(CertificationError::Kind::deck_mismatch, "decks differ for at least one label");
  }
  cert.deck_witnesses = std::move(*witnesses);
  cert.separator = find_signature_separator(first.graph(), second.graph());
  cert.first_form = canonical_form(first.graph());
  cert.second_form = canonical_form(second.graph());
  return cert;
}

}  // namespace leafdeck
