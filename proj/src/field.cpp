#include "proot/field.hpp"

namespace proot {

namespace {

std::string not_prime_message(std::uint64_t n, std::uint64_t factor) {
  if (n < 2) return std::to_string(n) + " is not prime (primes are >= 2)";
  return std::to_string(n) + " is not prime (smallest factor " + std::to_string(factor) + ")";
}

void require_same_modulus(const FieldElement& a, const FieldElement& b) {
  if (a.modulus() != b.modulus()) throw ModulusMismatchError(a.modulus(), b.modulus());
}

}  // namespace

NotPrimeError::NotPrimeError(std::uint64_t n, std::uint64_t smallest_factor)
    : std::invalid_argument(not_prime_message(n, smallest_factor)),
      value_(n),
      smallest_factor_(smallest_factor) {}

ModulusMismatchError::ModulusMismatchError(std::uint64_t lhs, std::uint64_t rhs)
    : std::invalid_argument("field elements have different moduli (" + std::to_string(lhs) + " vs " +
                            std::to_string(rhs) + ")") {}

ZeroDivisionError::ZeroDivisionError() : std::domain_error("zero has no multiplicative inverse") {}

std::uint64_t least_divisor(std::uint64_t start, std::uint64_t k) {
  if (k < 2) throw std::invalid_argument("least_divisor: k must be >= 2");
  if (start < 2 || start > k) throw std::invalid_argument("least_divisor: start must lie in [2, k]");
  for (std::uint64_t d = start; d <= k / d; ++d) {
    if (k % d == 0) return d;
  }
  // Divisors above sqrt(k) are cofactors k / e of divisors e below it; the
  // smallest such one at or above start comes from the largest e.
  std::uint64_t e = start - 1;
  while (e > k / e) --e;
  for (; e >= 1; --e) {
    if (k % e == 0 && k / e >= start) return k / e;
  }
  return k;
}

bool is_prime(std::uint64_t n) { return n >= 2 && least_divisor(2, n) == n; }

std::vector<std::uint64_t> primes_up_to(std::uint64_t limit) {
  std::vector<std::uint64_t> primes;
  for (std::uint64_t n = 2; n <= limit; ++n) {
    if (is_prime(n)) primes.push_back(n);
  }
  return primes;
}

bool divides(std::uint64_t d, std::uint64_t n) {
  if (d == 0) throw std::invalid_argument("divides: divisor must be >= 1");
  return n % d == 0;
}

std::uint64_t gcd(std::uint64_t m, std::uint64_t n) {
  if (m == 0 && n == 0) throw std::invalid_argument("gcd(0, 0) is undefined");
  while (n != 0) {
    std::uint64_t r = m % n;
    m = n;
    n = r;
  }
  return m;
}

bool relatively_prime(std::uint64_t m, std::uint64_t n) {
  if (m == 0 || n == 0) throw std::invalid_argument("relatively_prime: arguments must be >= 1");
  return gcd(m, n) == 1;
}

Prime::Prime(std::uint64_t value) : value_(value) {
  if (value >= kModulusBound) throw std::out_of_range("modulus " + std::to_string(value) + " is not below 2^31");
  if (value < 2) throw NotPrimeError(value, 0);
  std::uint64_t d = least_divisor(2, value);
  if (d != value) throw NotPrimeError(value, d);
}

FieldElement::FieldElement(std::uint64_t value, Prime modulus)
    : residue_(value % modulus.value()), modulus_(modulus) {}

FieldElement FieldElement::from_signed(std::int64_t value, Prime modulus) {
  auto p = static_cast<std::int64_t>(modulus.value());
  std::int64_t r = value % p;
  if (r < 0) r += p;
  return FieldElement(static_cast<std::uint64_t>(r), modulus);
}

FieldElement field_add(const FieldElement& a, const FieldElement& b) {
  require_same_modulus(a, b);
  return FieldElement(a.residue() + b.residue(), a.modulus());
}

FieldElement field_neg(const FieldElement& a) {
  return FieldElement(a.modulus().value() - a.residue(), a.modulus());
}

FieldElement field_sub(const FieldElement& a, const FieldElement& b) { return field_add(a, field_neg(b)); }

FieldElement field_mul(const FieldElement& a, const FieldElement& b) {
  require_same_modulus(a, b);
  // Both residues are below 2^31, so the product fits in 62 bits.
  return FieldElement(a.residue() * b.residue(), a.modulus());
}

FieldElement field_pow(const FieldElement& a, std::uint64_t exponent) {
  FieldElement result = FieldElement::one(a.modulus());
  FieldElement base = a;
  while (exponent != 0) {
    if (exponent & 1) result = field_mul(result, base);
    base = field_mul(base, base);
    exponent >>= 1;
  }
  return result;
}

FieldElement field_inv(const FieldElement& a) {
  if (a.is_zero()) throw ZeroDivisionError();
  return field_pow(a, a.modulus().value() - 2);
}

FieldElement field_div(const FieldElement& a, const FieldElement& b) {
  require_same_modulus(a, b);
  return field_mul(a, field_inv(b));
}

std::string to_string(const FieldElement& a) {
  return std::to_string(a.residue()) + " mod " + std::to_string(a.modulus().value());
}

}  // namespace proot
