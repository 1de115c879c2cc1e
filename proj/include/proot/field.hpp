#pragma once

// Exact arithmetic in Z/pZ for prime p < 2^31, plus the small amount of
// elementary number theory (divisibility, gcd, trial-division primality)
// the rest of the library is built on.

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace proot {

/// Exclusive upper bound on moduli. Keeps (p-1)^2 exact in 64 bits.
inline constexpr std::uint64_t kModulusBound = std::uint64_t{1} << 31;

/// Raised when a number that must be prime is not. Carries the least
/// divisor >= 2 when there is one (0 for n < 2).
class NotPrimeError : public std::invalid_argument {
 public:
  NotPrimeError(std::uint64_t n, std::uint64_t smallest_factor);

  std::uint64_t value() const noexcept { return value_; }
  std::uint64_t smallest_factor() const noexcept { return smallest_factor_; }

 private:
  std::uint64_t value_;
  std::uint64_t smallest_factor_;
};

/// Raised when two field elements over different moduli are combined.
class ModulusMismatchError : public std::invalid_argument {
 public:
  ModulusMismatchError(std::uint64_t lhs, std::uint64_t rhs);
};

/// Raised on inverting or dividing by zero.
class ZeroDivisionError : public std::domain_error {
 public:
  ZeroDivisionError();
};

/// Smallest d with start <= d <= k and d | k. With start = 2 the result is
/// the least prime factor of k. Requires 2 <= start <= k.
std::uint64_t least_divisor(std::uint64_t start, std::uint64_t k);

bool is_prime(std::uint64_t n);

/// All primes p with 2 <= p <= limit, ascending.
std::vector<std::uint64_t> primes_up_to(std::uint64_t limit);

/// Requires d >= 1.
bool divides(std::uint64_t d, std::uint64_t n);

/// Euclidean gcd; gcd(0, 0) is rejected.
std::uint64_t gcd(std::uint64_t m, std::uint64_t n);

/// Requires m, n >= 1.
bool relatively_prime(std::uint64_t m, std::uint64_t n);

/// A validated prime in [2, 2^31).
class Prime {
 public:
  /// Throws NotPrimeError for composites and values below 2, and
  /// std::out_of_range for values at or above the modulus bound.
  explicit Prime(std::uint64_t value);

  std::uint64_t value() const noexcept { return value_; }
  operator std::uint64_t() const noexcept { return value_; }

  friend bool operator==(Prime, Prime) = default;
  friend auto operator<=>(Prime, Prime) = default;

 private:
  std::uint64_t value_;
};

/// A residue in [0, p) tagged with its modulus.
class FieldElement {
 public:
  /// Reduces `value` modulo p.
  FieldElement(std::uint64_t value, Prime modulus);

  /// Reduces a signed integer into [0, p).
  static FieldElement from_signed(std::int64_t value, Prime modulus);
  static FieldElement zero(Prime modulus) { return FieldElement(0, modulus); }
  static FieldElement one(Prime modulus) { return FieldElement(1, modulus); }

  std::uint64_t residue() const noexcept { return residue_; }
  Prime modulus() const noexcept { return modulus_; }
  bool is_zero() const noexcept { return residue_ == 0; }

  friend bool operator==(const FieldElement&, const FieldElement&) = default;

 private:
  std::uint64_t residue_;
  Prime modulus_;
};

FieldElement field_add(const FieldElement& a, const FieldElement& b);
FieldElement field_neg(const FieldElement& a);
FieldElement field_sub(const FieldElement& a, const FieldElement& b);
FieldElement field_mul(const FieldElement& a, const FieldElement& b);

/// Square-and-multiply. field_pow(a, 0) is 1 for every a, including 0.
FieldElement field_pow(const FieldElement& a, std::uint64_t exponent);

/// a^(p-2). Throws ZeroDivisionError for a = 0.
FieldElement field_inv(const FieldElement& a);
FieldElement field_div(const FieldElement& a, const FieldElement& b);

inline FieldElement operator+(const FieldElement& a, const FieldElement& b) { return field_add(a, b); }
inline FieldElement operator-(const FieldElement& a, const FieldElement& b) { return field_sub(a, b); }
inline FieldElement operator-(const FieldElement& a) { return field_neg(a); }
inline FieldElement operator*(const FieldElement& a, const FieldElement& b) { return field_mul(a, b); }
inline FieldElement operator/(const FieldElement& a, const FieldElement& b) { return field_div(a, b); }

std::string to_string(const FieldElement& a);

}  // namespace proot
