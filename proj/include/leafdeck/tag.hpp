#pragma once

// Provenance tags naming the role a vertex plays in a construction. Tags are
// metadata: equivalence testing never looks at them.

#include <charconv>
#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "leafdeck/seq.hpp"

namespace leafdeck {

enum class Role {
  anonymous,
  u,            // U(w): hub of a word w
  v,            // V(i,h): side vertex, or root of a lexicographic tree
  y,            // Y(w,k): spine vertex k of the caterpillar of w
  z,            // Z(w,i): shared caterpillar/lexicographic-tree vertex
  x,            // X(i): labelled leaf i
  lex_internal  // Lex(i,h,path): internal vertex of a lexicographic tree
};

struct VertexTag {
  Role role = Role::anonymous;
  BinarySeq word;        // u, y, z
  std::size_t index = 0; // v, y, z, x, lex_internal
  int bit = 0;           // v, lex_internal
  std::string path;      // lex_internal: 'L'/'R' steps from the root

  static VertexTag none() { return {}; }
  static VertexTag U(const BinarySeq& w) { return {Role::u, w, 0, 0, {}}; }
  static VertexTag V(std::size_t i, int h) { return {Role::v, {}, i, h, {}}; }
  static VertexTag Y(const BinarySeq& w, std::size_t k) { return {Role::y, w, k, 0, {}}; }
  static VertexTag Z(const BinarySeq& w, std::size_t i) { return {Role::z, w, i, 0, {}}; }
  static VertexTag X(std::size_t i) { return {Role::x, {}, i, 0, {}}; }
  static VertexTag Lex(std::size_t i, int h, std::string path) {
    return {Role::lex_internal, {}, i, h, std::move(path)};
  }

  bool is_anonymous() const { return role == Role::anonymous; }

  std::string str() const {
    switch (role) {
      case Role::anonymous:
        return {};
      case Role::u:
        return "U(" + word.str() + ")";
      case Role::v:
        return "V(" + std::to_string(index) + "," + std::to_string(bit) + ")";
      case Role::y:
        return "Y(" + word.str() + "," + std::to_string(index) + ")";
      case Role::z:
        return "Z(" + word.str() + "," + std::to_string(index) + ")";
      case Role::x:
        return "X(" + std::to_string(index) + ")";
      case Role::lex_internal:
        return "Lex(" + std::to_string(index) + "," + std::to_string(bit) + "," + path + ")";
    }
    return {};
  }

  bool operator==(const VertexTag&) const = default;
  auto operator<=>(const VertexTag&) const = default;
};

namespace detail {

inline std::vector<std::string_view> split_args(std::string_view body) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (std::size_t k = 0; k <= body.size(); ++k) {
    if (k == body.size() || body[k] == ',') {
      parts.push_back(body.substr(start, k - start));
      start = k + 1;
    }
  }
  return parts;
}

inline std::size_t parse_index(std::string_view text, std::string_view whole) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw std::invalid_argument("bad integer in tag '" + std::string(whole) + "'");
  }
  return value;
}

inline int parse_bit(std::string_view text, std::string_view whole) {
  if (text == "0") return 0;
  if (text == "1") return 1;
  throw std::invalid_argument("bad bit in tag '" + std::string(whole) + "'");
}

}  // namespace detail

/// Inverse of VertexTag::str(). The empty string parses to an anonymous tag.
inline VertexTag parse_tag(std::string_view text) {
  if (text.empty()) return VertexTag::none();
  const auto open = text.find('(');
  if (open == std::string_view::npos || text.back() != ')') {
    throw std::invalid_argument("malformed tag '" + std::string(text) + "'");
  }
  const auto head = text.substr(0, open);
  const auto args = detail::split_args(text.substr(open + 1, text.size() - open - 2));
  auto want = [&](std::size_t n) {
    if (args.size() != n) throw std::invalid_argument("wrong arity in tag '" + std::string(text) + "'");
  };
  if (head == "U") {
    want(1);
    return VertexTag::U(BinarySeq::from_string(args[0]));
  }
  if (head == "V") {
    want(2);
    return VertexTag::V(detail::parse_index(args[0], text), detail::parse_bit(args[1], text));
  }
  if (head == "Y") {
    want(2);
    return VertexTag::Y(BinarySeq::from_string(args[0]), detail::parse_index(args[1], text));
  }
  if (head == "Z") {
    want(2);
    return VertexTag::Z(BinarySeq::from_string(args[0]), detail::parse_index(args[1], text));
  }
  if (head == "X") {
    want(1);
    return VertexTag::X(detail::parse_index(args[0], text));
  }
  if (head == "Lex") {
    want(3);
    for (char c : args[2]) {
      if (c != 'L' && c != 'R') throw std::invalid_argument("bad path in tag '" + std::string(text) + "'");
    }
    return VertexTag::Lex(detail::parse_index(args[0], text), detail::parse_bit(args[1], text),
                          std::string(args[2]));
  }
  throw std::invalid_argument("unknown tag role in '" + std::string(text) + "'");
}

}  // namespace leafdeck
