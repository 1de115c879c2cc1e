#pragma once

// Exhaustive and randomized sweeps of the library's invariants, one
// property per law. Used by `proot selftest` and the acceptance suite.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace proot {

struct PropertyResult {
  std::string name;
  bool pass;
  std::string detail;  // first counterexample, empty on success
};

/// A check returns a counterexample description, or nullopt when it holds
/// for every case up to the bound.
using PropertyCheck = std::function<std::optional<std::string>(std::uint64_t bound)>;

struct Property {
  std::string name;
  std::string module;
  PropertyCheck check;
};

const std::vector<Property>& selftest_properties();

/// Runs every property with primes and integers up to `bound` (>= 2).
/// Randomized properties use a fixed seed, so results are reproducible.
std::vector<PropertyResult> run_selftest(std::uint64_t bound);

}  // namespace proot
