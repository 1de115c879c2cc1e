#include "proot/primitive_root.hpp"

#include <stdexcept>
#include <string>

namespace proot {

FieldElement primitive_root_aux(std::uint64_t k, Prime p, const AuxObserver& observer) {
  if (k == 0 || !divides(k, p.value() - 1)) {
    throw std::invalid_argument(std::to_string(k) + " does not divide " + std::to_string(p.value() - 1));
  }
  if (k == 1) return FieldElement::one(p);

  const Prime q(least_divisor(2, k));
  const std::uint64_t n = number_of_powers(k, q.value());
  const PrimePowerFactor factor{q, n};
  const std::uint64_t cofactor = k / factor.value();

  const FieldElement witness = witness_with_order_q_n(q, n, p);
  const FieldElement rest = primitive_root_aux(cofactor, p, observer);
  const FieldElement result = field_mul(witness, rest);
  if (observer) observer(AuxStep{k, factor, cofactor, witness, rest, result});
  return result;
}

FieldElement primitive_root(Prime p) { return primitive_root_aux(p.value() - 1, p); }

PrimitiveRootResult decompose_with_witnesses(Prime p) {
  PrimitiveRootResult out{p, FieldElement::one(p), {}, {}};
  std::uint64_t k = p.value() - 1;
  while (k > 1) {
    const Prime q(least_divisor(2, k));
    const PrimePowerFactor factor{q, number_of_powers(k, q.value())};
    const FieldElement witness = witness_with_order_q_n(factor.q, factor.n, p);
    out.factors.push_back(factor);
    out.witnesses.push_back(witness);
    out.root = field_mul(out.root, witness);
    k /= factor.value();
  }
  return out;
}

bool is_primitive_root(const FieldElement& g) {
  const std::uint64_t p = g.modulus().value();
  const std::uint64_t base = g.residue();
  if (base == 0) return false;

  std::vector<bool> seen(p, false);
  std::uint64_t distinct = 0;
  std::uint64_t power = 1;
  for (std::uint64_t i = 1; i < p; ++i) {
    power = power * base % p;
    if (!seen[power]) {
      seen[power] = true;
      ++distinct;
    }
  }
  return distinct == p - 1;
}

bool is_primitive_root(std::uint64_t g, Prime p) { return is_primitive_root(FieldElement(g, p)); }

std::uint64_t count_primitive_roots(Prime p) {
  std::uint64_t count = 0;
  for (std::uint64_t g = 1; g < p.value(); ++g) {
    if (is_primitive_root(g, p)) ++count;
  }
  return count;
}

std::uint64_t totient(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("totient: n must be >= 1");
  std::uint64_t count = 0;
  for (std::uint64_t k = 1; k <= n; ++k) {
    if (gcd(k, n) == 1) ++count;
  }
  return count;
}

}  // namespace proot
