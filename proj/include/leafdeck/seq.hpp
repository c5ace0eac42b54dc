#pragma once

// Fixed-length binary sequences, parity classes, single-position flips and
// masks. Positions are 1-indexed everywhere in the public interface.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace leafdeck {

class SeqError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Parity { even, odd };

inline Parity opposite(Parity p) { return p == Parity::even ? Parity::odd : Parity::even; }

inline std::string_view to_string(Parity p) { return p == Parity::even ? "even" : "odd"; }

inline Parity parse_parity(std::string_view text) {
  if (text == "even") return Parity::even;
  if (text == "odd") return Parity::odd;
  throw SeqError("unknown parity '" + std::string(text) + "'");
}

/// A binary sequence of length 1..64. Position 1 is stored as the most
/// significant bit so that integer order on equal lengths is lexicographic
/// order with 0 < 1.
class BinarySeq {
 public:
  static constexpr std::size_t max_length = 64;

  BinarySeq() = default;

  /// All-zero sequence of the given length.
  explicit BinarySeq(std::size_t length) : length_(length) { check_length(length); }

  static BinarySeq from_string(std::string_view text) {
    BinarySeq w(text.size());
    for (std::size_t k = 0; k < text.size(); ++k) {
      if (text[k] == '1') {
        w.bits_ |= w.mask_of(k + 1);
      } else if (text[k] != '0') {
        throw SeqError("binary sequence may only contain 0 and 1: '" + std::string(text) + "'");
      }
    }
    return w;
  }

  /// Builds the sequence whose positions 1..length spell `value` in binary,
  /// position 1 most significant.
  static BinarySeq from_integer(std::uint64_t value, std::size_t length) {
    BinarySeq w(length);
    if (length < max_length && (value >> length) != 0) {
      throw SeqError("value does not fit in " + std::to_string(length) + " bits");
    }
    w.bits_ = value;
    return w;
  }

  std::size_t length() const { return length_; }
  std::uint64_t as_integer() const { return bits_; }

  int at(std::size_t i) const {
    check_position(i);
    return (bits_ & mask_of(i)) != 0 ? 1 : 0;
  }
  int operator()(std::size_t i) const { return at(i); }

  std::size_t weight() const { return static_cast<std::size_t>(__builtin_popcountll(bits_)); }

  Parity parity() const { return weight() % 2 == 0 ? Parity::even : Parity::odd; }

  BinarySeq flipped(std::size_t i) const {
    check_position(i);
    BinarySeq w = *this;
    w.bits_ ^= mask_of(i);
    return w;
  }

  std::string str() const {
    std::string out(length_, '0');
    for (std::size_t k = 1; k <= length_; ++k) {
      if (at(k) == 1) out[k - 1] = '1';
    }
    return out;
  }

  void check_position(std::size_t i) const {
    if (i < 1 || i > length_) {
      throw SeqError("position " + std::to_string(i) + " out of range [1, " +
                     std::to_string(length_) + "]");
    }
  }

  bool operator==(const BinarySeq&) const = default;

  // Shorter sequences order first; equal lengths compare lexicographically.
  std::strong_ordering operator<=>(const BinarySeq& other) const {
    if (auto c = length_ <=> other.length_; c != 0) return c;
    return bits_ <=> other.bits_;
  }

 private:
  static void check_length(std::size_t length) {
    if (length < 1 || length > max_length) {
      throw SeqError("sequence length must lie in [1, 64], got " + std::to_string(length));
    }
  }

  std::uint64_t mask_of(std::size_t i) const { return std::uint64_t{1} << (length_ - i); }

  std::uint64_t bits_ = 0;
  std::size_t length_ = 0;
};

/// A binary sequence with exactly one position replaced by '*'.
class MaskedSeq {
 public:
  MaskedSeq(const BinarySeq& w, std::size_t star) : star_(star) {
    w.check_position(star);
    // The masked position is normalised to 0 so that equality ignores it.
    base_ = w.at(star) == 1 ? w.flipped(star) : w;
  }

  std::size_t length() const { return base_.length(); }
  std::size_t star_position() const { return star_; }

  /// Element at position i: '0', '1' or '*'.
  char at(std::size_t i) const {
    base_.check_position(i);
    if (i == star_) return '*';
    return base_.at(i) == 1 ? '1' : '0';
  }

  std::string str() const {
    std::string out = base_.str();
    out[star_ - 1] = '*';
    return out;
  }

  bool operator==(const MaskedSeq&) const = default;
  auto operator<=>(const MaskedSeq& other) const {
    if (auto c = star_ <=> other.star_; c != 0) return c;
    return base_ <=> other.base_;
  }

 private:
  BinarySeq base_;
  std::size_t star_;
};

inline std::size_t weight(const BinarySeq& w) { return w.weight(); }

inline BinarySeq flip(const BinarySeq& w, std::size_t i) { return w.flipped(i); }

inline MaskedSeq mask(const BinarySeq& w, std::size_t i) { return MaskedSeq(w, i); }

inline std::strong_ordering lex_compare(const BinarySeq& a, const BinarySeq& b) {
  if (a.length() != b.length()) {
    throw SeqError("cannot compare sequences of lengths " + std::to_string(a.length()) + " and " +
                   std::to_string(b.length()));
  }
  return a <=> b;
}

/// All length-r sequences whose weight has parity p, in lexicographic order.
inline std::vector<BinarySeq> enumerate_parity(std::size_t r, Parity p) {
  if (r < 1 || r > 30) throw SeqError("enumerate_parity needs 1 <= r <= 30");
  std::vector<BinarySeq> out;
  out.reserve(std::size_t{1} << (r - 1));
  for (std::uint64_t v = 0; v < (std::uint64_t{1} << r); ++v) {
    auto w = BinarySeq::from_integer(v, r);
    if (w.parity() == p) out.push_back(w);
  }
  return out;
}

/// Sequences of parity p with w(i) = h, in lexicographic order.
inline std::vector<BinarySeq> subset_ih(std::size_t r, Parity p, std::size_t i, int h) {
  if (r < 2) throw SeqError("subset_ih needs r >= 2");
  if (i < 1 || i > r) throw SeqError("position " + std::to_string(i) + " out of range");
  if (h != 0 && h != 1) throw SeqError("bit must be 0 or 1");
  std::vector<BinarySeq> out;
  for (const auto& w : enumerate_parity(r, p)) {
    if (w.at(i) == h) out.push_back(w);
  }
  return out;
}

inline std::set<MaskedSeq> masked_set(const std::vector<BinarySeq>& sequences, std::size_t i) {
  std::set<MaskedSeq> out;
  if (sequences.empty()) return out;
  const std::size_t length = sequences.front().length();
  for (const auto& w : sequences) {
    if (w.length() != length) throw SeqError("masked_set requires sequences of equal length");
    out.insert(MaskedSeq(w, i));
  }
  return out;
}

inline std::vector<BinarySeq> sorted_lex(std::vector<BinarySeq> sequences) {
  std::sort(sequences.begin(), sequences.end(),
            [](const BinarySeq& a, const BinarySeq& b) { return lex_compare(a, b) < 0; });
  return sequences;
}

}  // namespace leafdeck

template <>
struct std::hash<leafdeck::BinarySeq> {
  std::size_t operator()(const leafdeck::BinarySeq& w) const noexcept {
    return std::hash<std::uint64_t>{}(w.as_integer() * 131 + w.length());
  }
};
