#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>

namespace garside {

/// ⌈log2(1 + |v|)⌉: bits needed for the magnitude of v.
inline std::size_t magnitude_bits(std::int64_t v) {
  std::uint64_t m = v < 0 ? static_cast<std::uint64_t>(-(v + 1)) + 1 : static_cast<std::uint64_t>(v);
  return static_cast<std::size_t>(std::bit_width(m));
}

/// ⌈log2(n)⌉ for n ≥ 1 (bits of an enum with n variants).
inline std::size_t enum_bits(std::size_t n) {
  return n <= 1 ? 0 : static_cast<std::size_t>(std::bit_width(n - 1));
}

}  // namespace garside
