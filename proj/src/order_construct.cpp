#include "proot/order_construct.hpp"

#include <limits>
#include <stdexcept>
#include <string>

#include "proot/order.hpp"

namespace proot {

std::optional<std::uint64_t> checked_power(std::uint64_t base, std::uint64_t exponent) {
  if (base <= 1) return exponent == 0 ? 1 : base;
  std::uint64_t result = 1;
  for (std::uint64_t i = 0; i < exponent; ++i) {
    if (result > std::numeric_limits<std::uint64_t>::max() / base) return std::nullopt;
    result *= base;
  }
  return result;
}

std::uint64_t PrimePowerFactor::value() const {
  auto v = checked_power(q.value(), n);
  if (!v) throw std::overflow_error("prime power does not fit in 64 bits");
  return *v;
}

std::uint64_t number_of_powers(std::uint64_t x, std::uint64_t q) {
  if (x == 0) throw std::invalid_argument("number_of_powers: x must be >= 1");
  if (q < 2) throw std::invalid_argument("number_of_powers: q must be >= 2");
  std::uint64_t k = 0;
  while (x % q == 0) {
    x /= q;
    ++k;
  }
  return k;
}

FieldElement witness_with_order_q_n(Prime q, std::uint64_t n, Prime p) {
  if (n == 0) return FieldElement::one(p);

  const std::uint64_t group_size = p.value() - 1;
  const auto full = checked_power(q.value(), n);
  if (!full || !divides(*full, group_size)) {
    throw std::invalid_argument(std::to_string(q.value()) + "^" + std::to_string(n) + " does not divide " +
                                std::to_string(group_size));
  }
  const std::uint64_t partial = *full / q.value();
  const FieldElement one = FieldElement::one(p);

  for (std::uint64_t x = 1; x < p.value(); ++x) {
    FieldElement candidate(x, p);
    if (field_pow(candidate, *full) == one && field_pow(candidate, partial) != one) return candidate;
  }
  throw WitnessNotFoundError("no element of order " + std::to_string(*full) + " mod " + std::to_string(p.value()));
}

FieldElement product_order_compose(const FieldElement& a, const FieldElement& b) {
  if (a.is_zero() || b.is_zero()) throw std::invalid_argument("product_order_compose: operands must be nonzero");
  const std::uint64_t ord_a = order(a);
  const std::uint64_t ord_b = order(b);
  if (!relatively_prime(ord_a, ord_b)) {
    throw std::invalid_argument("product_order_compose: orders " + std::to_string(ord_a) + " and " +
                                std::to_string(ord_b) + " are not coprime");
  }
  return field_mul(a, b);
}

}  // namespace proot
