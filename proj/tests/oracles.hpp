#pragma once

// Brute-force reference implementations for tests. Everything here works
// on plain integers by exhaustive search or repeated multiplication and
// shares no code with the library.

#include <algorithm>
#include <cstdint>
#include <vector>

namespace oracle {

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d < n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

inline std::uint64_t least_divisor(std::uint64_t start, std::uint64_t k) {
  for (std::uint64_t d = start; d <= k; ++d) {
    if (k % d == 0) return d;
  }
  return 0;
}

inline std::uint64_t gcd(std::uint64_t m, std::uint64_t n) {
  for (std::uint64_t c = std::max(m, n); c > 1; --c) {
    if (m % c == 0 && n % c == 0) return c;
  }
  return 1;
}

inline std::uint64_t pow(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  for (std::uint64_t i = 0; i < e; ++i) r = r * (a % p) % p;
  return r;
}

inline std::uint64_t inverse(std::uint64_t a, std::uint64_t p) {
  for (std::uint64_t b = 1; b < p; ++b) {
    if (a * b % p == 1) return b;
  }
  return 0;
}

/// Least k >= 1 with a^k = 1 mod p; 0 if none exists within p steps.
inline std::uint64_t order(std::uint64_t a, std::uint64_t p) {
  std::uint64_t x = 1;
  for (std::uint64_t k = 1; k <= p; ++k) {
    x = x * (a % p) % p;
    if (x == 1) return k;
  }
  return 0;
}

/// Least x in [1, p-1] of order exactly `target`; 0 if none.
inline std::uint64_t least_of_order(std::uint64_t target, std::uint64_t p) {
  for (std::uint64_t x = 1; x < p; ++x) {
    if (order(x, p) == target) return x;
  }
  return 0;
}

inline std::uint64_t number_of_powers(std::uint64_t x, std::uint64_t q) {
  std::uint64_t k = 0;
  std::uint64_t qk = q;
  while (x % qk == 0) {
    ++k;
    qk *= q;
  }
  return k;
}

/// Roots in [0, p-1] of sum c_i x^i, evaluating each monomial separately.
inline std::vector<std::uint64_t> roots(const std::vector<std::int64_t>& coeffs, std::uint64_t p) {
  std::vector<std::uint64_t> out;
  const auto sp = static_cast<std::int64_t>(p);
  for (std::uint64_t x = 0; x < p; ++x) {
    std::int64_t sum = 0;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      const std::int64_t c = ((coeffs[i] % sp) + sp) % sp;
      sum = (sum + c * static_cast<std::int64_t>(pow(x, i, p))) % sp;
    }
    if (sum == 0) out.push_back(x);
  }
  return out;
}

inline std::uint64_t totient(std::uint64_t n) {
  std::uint64_t count = 0;
  for (std::uint64_t k = 1; k <= n; ++k) count += gcd(k, n) == 1;
  return count;
}

/// Residues g whose powers g^1..g^(p-1) hit all of 1..p-1.
inline std::vector<std::uint64_t> generators(std::uint64_t p) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t g = 1; g < p; ++g) {
    std::vector<bool> seen(p, false);
    std::uint64_t x = 1;
    for (std::uint64_t i = 1; i < p; ++i) {
      x = x * g % p;
      seen[x] = true;
    }
    bool all = true;
    for (std::uint64_t r = 1; r < p; ++r) all = all && seen[r];
    if (all) out.push_back(g);
  }
  return out;
}

}  // namespace oracle
