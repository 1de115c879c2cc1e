#pragma once

// Integer polynomials read as congruences modulo a prime.
//
// Coefficients are exact integers in ascending order: coeffs()[i] is the
// coefficient of x^i. They are reduced mod p only when the polynomial is
// evaluated, so identities such as synthetic division hold over Z and not
// merely over Z/pZ. No operation normalizes implicitly; call normalized()
// when trailing zeros should be dropped.

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "proot/field.hpp"

namespace proot {

using BigInt = boost::multiprecision::cpp_int;

class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {}
  IntPolynomial(std::initializer_list<std::int64_t> coeffs);

  const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }
  std::size_t size() const noexcept { return coeffs_.size(); }
  bool empty() const noexcept { return coeffs_.empty(); }

  /// size() - 1; the empty polynomial has no degree and throws.
  std::size_t degree() const;

  /// Copy with trailing zero coefficients removed.
  IntPolynomial normalized() const;

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

 private:
  std::vector<BigInt> coeffs_;
};

/// Coefficient-wise sum; the result has the length of the longer operand.
IntPolynomial operator+(const IntPolynomial& lhs, const IntPolynomial& rhs);

/// Integer convolution of the coefficient lists. Empty if either is empty.
IntPolynomial poly_mul(const IntPolynomial& lhs, const IntPolynomial& rhs);

std::string to_string(const IntPolynomial& poly);

/// Horner evaluation with every step reduced mod p. The empty polynomial
/// evaluates to 0.
FieldElement eval_pfield_polynomial(const IntPolynomial& poly, const FieldElement& x);

bool pfield_polynomial_root_p(const IntPolynomial& poly, const FieldElement& a);

/// Nonempty with leading (last) coefficient nonzero mod p.
bool non_trivial_pfield_polynomial_p(const IntPolynomial& poly, Prime p);

/// Distinct roots in [0, p-1], ascending, found by exhaustive scan.
/// Rejects trivial polynomials.
std::vector<FieldElement> pfield_polynomial_roots(const IntPolynomial& poly, Prime p);
std::uint64_t pfield_polynomial_num_roots(const IntPolynomial& poly, Prime p);

/// The unique root -a0/a1 of a non-trivial linear polynomial [a0, a1].
FieldElement root_of_linear(const IntPolynomial& poly, Prime p);

struct SyntheticDivision {
  IntPolynomial quotient;
  BigInt remainder;
};

/// Exact division by (x + a): poly = (x + a) * quotient + remainder over Z.
SyntheticDivision divide_by_x_plus_a(const IntPolynomial& poly, const BigInt& a);

/// -1 + x^n, for n >= 1.
IntPolynomial fermat_poly(std::uint64_t n);

/// 1 + x^d + x^(2d) + ... + x^((c-1)d), for c, d >= 1.
IntPolynomial geometric_block_poly(std::uint64_t c, std::uint64_t d);

}  // namespace proot
