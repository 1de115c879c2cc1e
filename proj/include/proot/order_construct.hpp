#pragma once

// Building elements of a prescribed order: a witness of order q^n for each
// prime power dividing p - 1, and the product rule for coprime orders.

#include <cstdint>
#include <optional>

#include "proot/field.hpp"

namespace proot {

/// The factor q^n, q prime and n >= 1.
struct PrimePowerFactor {
  Prime q;
  std::uint64_t n;

  /// q^n. Throws std::overflow_error if it does not fit in 64 bits.
  std::uint64_t value() const;

  friend bool operator==(const PrimePowerFactor&, const PrimePowerFactor&) = default;
};

/// base^exponent over the naturals; std::nullopt on 64-bit overflow.
std::optional<std::uint64_t> checked_power(std::uint64_t base, std::uint64_t exponent);

/// Largest k with q^k | x. Requires x >= 1 and q >= 2.
std::uint64_t number_of_powers(std::uint64_t x, std::uint64_t q);

/// Thrown when a witness search exhausts [1, p-1]. Only reachable if the
/// arithmetic underneath is broken.
class WitnessNotFoundError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Least x in [1, p-1] with x^(q^n) = 1 and x^(q^(n-1)) != 1, so that
/// order(x) = q^n. Returns 1 for n = 0. Requires q^n | p - 1.
FieldElement witness_with_order_q_n(Prime q, std::uint64_t n, Prime p);

/// Returns a * b after checking that order(a) and order(b) are coprime, in
/// which case order(a * b) = order(a) * order(b). Rejects zero operands and
/// orders sharing a factor.
FieldElement product_order_compose(const FieldElement& a, const FieldElement& b);

}  // namespace proot
