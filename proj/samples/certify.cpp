// Builds N(even) and N(odd) for r = 4, certifies that the first is not
// leaf-reconstructible and prints the separating vertex.

#include <iostream>

#include "leafdeck/construct.hpp"
#include "leafdeck/deck.hpp"

int main() {
  using namespace leafdeck;
  const auto even = build_binary_network(4, Parity::even);
  const auto odd = build_binary_network(4, Parity::odd);
  std::cout << "N(even): " << even.graph().vertex_count() << " vertices, " << even.graph().edge_count()
            << " edges\n";

  const auto cert = certify_not_leaf_reconstructible(even, odd);
  for (const auto& [label, f] : cert.deck_witnesses) {
    std::cout << "deck entry " << label << ": equivalent (" << f.mapping.size() << " vertices mapped)\n";
  }
  if (cert.separator) {
    std::cout << "vertex " << even.graph().vertex(cert.separator->vertex).tag.str() << " has signature "
              << cert.separator->signature.str() << ", which no vertex of N(odd) has\n";
  }
  return 0;
}
