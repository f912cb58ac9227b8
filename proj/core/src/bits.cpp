#include "bgrover/bits.hpp"

#include "bgrover/errors.hpp"

namespace bgrover {

std::string to_label(BasisIndex index, int n_bits) {
  std::string label(static_cast<std::size_t>(n_bits), '0');
  for (int b = 0; b < n_bits; ++b) {
    if ((index >> b) & 1U) label[static_cast<std::size_t>(n_bits - 1 - b)] = '1';
  }
  return label;
}

BasisIndex parse_label(std::string_view label) {
  if (label.empty() || label.size() > 63) {
    throw ParseError("basis label must have 1..63 bits, got '" + std::string(label) + "'");
  }
  BasisIndex value = 0;
  for (char c : label) {
    if (c != '0' && c != '1') {
      throw ParseError("basis label may only contain 0/1, got '" + std::string(label) + "'");
    }
    value = (value << 1) | static_cast<BasisIndex>(c == '1');
  }
  return value;
}

std::int64_t decode_twos_complement(BasisIndex outcome, int m) {
  if (m < 1 || m > 62) throw RangeError("two's complement width must be in [1, 62]");
  const BasisIndex modulus = BasisIndex{1} << m;
  if (outcome >= modulus) throw RangeError("register outcome does not fit in m bits");
  const auto value = static_cast<std::int64_t>(outcome);
  return outcome >= (modulus >> 1) ? value - static_cast<std::int64_t>(modulus) : value;
}

std::int64_t wrap_twos_complement(std::int64_t value, int m) {
  return decode_twos_complement(encode_twos_complement(value, m), m);
}

BasisIndex encode_twos_complement(std::int64_t value, int m) {
  if (m < 1 || m > 62) throw RangeError("two's complement width must be in [1, 62]");
  const auto modulus = std::int64_t{1} << m;
  std::int64_t r = value % modulus;
  if (r < 0) r += modulus;
  return static_cast<BasisIndex>(r);
}

BasisPattern BasisPattern::parse(std::string_view bits) {
  const BasisIndex value = parse_label(bits);
  return BasisPattern(value, static_cast<int>(bits.size()));
}

BasisPattern BasisPattern::from_integer(BasisIndex value, int n_bits) {
  if (n_bits < 1 || n_bits > 63) throw RangeError("pattern width must be in [1, 63]");
  if (value >> n_bits) throw RangeError("value does not fit in the pattern width");
  return BasisPattern(value, n_bits);
}

}  // namespace bgrover
