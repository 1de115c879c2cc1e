#include "proot/order.hpp"

#include <algorithm>

namespace proot {

PowerTrace all_powers(const FieldElement& a) {
  if (a.is_zero()) throw ZeroDivisionError();
  const std::uint64_t cap = a.modulus().value() - 1;
  const FieldElement one = FieldElement::one(a.modulus());

  PowerTrace trace{a, {}};
  FieldElement power = a;
  trace.entries.push_back(power);
  while (power != one && trace.entries.size() < cap) {
    power = field_mul(power, a);
    trace.entries.push_back(power);
  }
  return trace;
}

std::uint64_t order(const FieldElement& a) { return all_powers(a).length(); }

std::uint64_t order_fast(const FieldElement& a) {
  if (a.is_zero()) throw ZeroDivisionError();
  const std::uint64_t group_size = a.modulus().value() - 1;
  std::uint64_t ord = group_size;
  std::uint64_t rest = group_size;
  while (rest > 1) {
    const std::uint64_t q = least_divisor(2, rest);
    while (rest % q == 0) rest /= q;
    while (ord % q == 0 && field_pow(a, ord / q).residue() == 1) ord /= q;
  }
  return ord;
}

bool exists_smaller_power_eq_1(const FieldElement& a, std::uint64_t n) {
  const FieldElement one = FieldElement::one(a.modulus());
  FieldElement power = FieldElement::one(a.modulus());
  // Powers of a nonzero element cycle back to 1 within p - 1 steps.
  const std::uint64_t last = std::min(n - 1, a.modulus().value() - 1);
  for (std::uint64_t m = 1; n > 0 && m <= last; ++m) {
    power = field_mul(power, a);
    if (power == one) return true;
  }
  return false;
}

}  // namespace proot
