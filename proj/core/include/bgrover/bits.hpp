#ifndef BGROVER_BITS_HPP
#define BGROVER_BITS_HPP

#include <bit>
#include <cstdint>
#include <string>
#include <string_view>

namespace bgrover {

using BasisIndex = std::uint64_t;

/// Contiguous block of qubits [first, first + count).
struct QubitRange {
  int first = 0;
  int count = 0;

  constexpr int end() const { return first + count; }
  constexpr BasisIndex mask() const {
    return ((BasisIndex{1} << count) - 1) << first;
  }
  constexpr BasisIndex extract(BasisIndex index) const {
    return (index >> first) & ((BasisIndex{1} << count) - 1);
  }
  bool operator==(const QubitRange&) const = default;
};

inline int hamming_weight(BasisIndex value) { return std::popcount(value); }

/// Label of `index` on `n_bits` bits, most-significant bit first.
/// Qubit 0 is the least-significant bit, so label "1101" is index 13.
std::string to_label(BasisIndex index, int n_bits);

/// Inverse of to_label. Throws ParseError on anything but '0'/'1'.
BasisIndex parse_label(std::string_view label);

/// Signed reading of an m-bit register: outcomes >= 2^(m-1) map to outcome - 2^m.
std::int64_t decode_twos_complement(BasisIndex outcome, int m);

/// Reduces `value` modulo 2^m into the window [-2^(m-1), 2^(m-1) - 1].
std::int64_t wrap_twos_complement(std::int64_t value, int m);

/// Unsigned m-bit register pattern holding the two's complement of `value`.
BasisIndex encode_twos_complement(std::int64_t value, int m);

/// Fixed-width basis label, e.g. a search target.
class BasisPattern {
 public:
  BasisPattern() = default;

  /// Parses a most-significant-first bit string such as "1101".
  static BasisPattern parse(std::string_view bits);
  static BasisPattern from_integer(BasisIndex value, int n_bits);

  int n_bits() const { return n_bits_; }
  BasisIndex value() const { return value_; }
  int hamming_weight() const { return bgrover::hamming_weight(value_); }
  std::string bits() const { return to_label(value_, n_bits_); }

  bool operator==(const BasisPattern&) const = default;

 private:
  BasisPattern(BasisIndex value, int n_bits) : n_bits_(n_bits), value_(value) {}

  int n_bits_ = 0;
  BasisIndex value_ = 0;
};

}  // namespace bgrover

#endif  // BGROVER_BITS_HPP
