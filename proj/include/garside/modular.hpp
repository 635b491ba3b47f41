#pragma once

#include <cstdint>
#include <vector>

namespace garside::modular {

inline std::uint64_t mul(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t add(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  std::uint64_t s = a + b;
  return s >= m ? s - m : s;
}

inline std::uint64_t pow(std::uint64_t base, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  base %= m;
  while (e) {
    if (e & 1) r = mul(r, base, m);
    base = mul(base, base, m);
    e >>= 1;
  }
  return r;
}

/// Inverse modulo a prime (Fermat).
inline std::uint64_t inv(std::uint64_t a, std::uint64_t p) { return pow(a, p - 2, p); }

/// Deterministic Miller-Rabin for 64-bit inputs.
bool is_prime(std::uint64_t n);

/// The first `count` primes below 2^61, in descending order. Cached.
const std::vector<std::uint64_t>& large_primes(std::size_t count);

}  // namespace garside::modular
