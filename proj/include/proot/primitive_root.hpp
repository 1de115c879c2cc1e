#pragma once

// Constructive primitive roots.
//
// p - 1 is split into prime powers smallest prime first. For each q^n a
// witness of order exactly q^n is found by search, and the witnesses are
// multiplied together. Their orders are pairwise coprime, so the product
// has order p - 1.

#include <cstdint>
#include <functional>
#include <vector>

#include "proot/field.hpp"
#include "proot/order_construct.hpp"

namespace proot {

/// One level of the primitive_root_aux recursion: k = q^n * cofactor and
/// result = witness * rest, where order(witness) = q^n and
/// order(rest) = cofactor.
struct AuxStep {
  std::uint64_t k;
  PrimePowerFactor factor;
  std::uint64_t cofactor;
  FieldElement witness;
  FieldElement rest;
  FieldElement result;
};

using AuxObserver = std::function<void(const AuxStep&)>;

/// An element of order exactly k. Requires 1 <= k and k | p - 1. When an
/// observer is given it sees every recursion level, innermost first.
FieldElement primitive_root_aux(std::uint64_t k, Prime p, const AuxObserver& observer = {});

/// An element of order p - 1.
FieldElement primitive_root(Prime p);

struct PrimitiveRootResult {
  Prime p;
  FieldElement root;
  std::vector<PrimePowerFactor> factors;  // in peel order
  std::vector<FieldElement> witnesses;    // witnesses[i] has order factors[i].value()
};

/// The same construction as primitive_root, with the factor and witness
/// trail kept.
PrimitiveRootResult decompose_with_witnesses(Prime p);

/// Direct check that g^1 .. g^(p-1) hit every nonzero residue. Does not go
/// through order() or all_powers().
bool is_primitive_root(const FieldElement& g);
bool is_primitive_root(std::uint64_t g, Prime p);

/// Number of primitive roots of p, by exhaustive scan with is_primitive_root.
std::uint64_t count_primitive_roots(Prime p);

/// Euler's phi by direct gcd count. Rejects n = 0.
std::uint64_t totient(std::uint64_t n);

}  // namespace proot
