#pragma once

#include <cstdint>
#include <vector>

#include "proot/field.hpp"

namespace proot {

/// The powers a^1, a^2, ..., a^k mod p, stopping at the first power equal
/// to 1. Fermat's little theorem bounds k by p - 1, and the last entry is
/// always 1.
struct PowerTrace {
  FieldElement base;
  std::vector<FieldElement> entries;

  std::size_t length() const noexcept { return entries.size(); }
};

/// Builds the power trace of a nonzero element. Throws ZeroDivisionError
/// for a = 0, which has no trace ending in 1.
PowerTrace all_powers(const FieldElement& a);

/// Multiplicative order of a, defined as the length of its power trace.
std::uint64_t order(const FieldElement& a);

/// Same value as order(), computed by stripping prime factors from p - 1
/// instead of walking the trace. Used where p is too large to materialize
/// a trace.
std::uint64_t order_fast(const FieldElement& a);

/// True iff a^m = 1 for some 1 <= m < n.
bool exists_smaller_power_eq_1(const FieldElement& a, std::uint64_t n);

}  // namespace proot
