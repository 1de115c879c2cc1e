#include "proot/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace proot {

namespace {

FieldElement reduce(const BigInt& value, Prime p) {
  BigInt r = value % p.value();
  if (r < 0) r += p.value();
  return FieldElement(r.convert_to<std::uint64_t>(), p);
}

void require_non_trivial(const IntPolynomial& poly, Prime p) {
  if (!non_trivial_pfield_polynomial_p(poly, p)) {
    throw std::invalid_argument("polynomial " + to_string(poly) + " is trivial mod " + std::to_string(p.value()));
  }
}

}  // namespace

IntPolynomial::IntPolynomial(std::initializer_list<std::int64_t> coeffs) : coeffs_(coeffs.begin(), coeffs.end()) {}

std::size_t IntPolynomial::degree() const {
  if (coeffs_.empty()) throw std::domain_error("the zero polynomial has no degree");
  return coeffs_.size() - 1;
}

IntPolynomial IntPolynomial::normalized() const {
  std::vector<BigInt> c = coeffs_;
  while (!c.empty() && c.back() == 0) c.pop_back();
  return IntPolynomial(std::move(c));
}

IntPolynomial operator+(const IntPolynomial& lhs, const IntPolynomial& rhs) {
  std::vector<BigInt> sum(std::max(lhs.size(), rhs.size()));
  for (std::size_t i = 0; i < lhs.size(); ++i) sum[i] += lhs.coeffs()[i];
  for (std::size_t i = 0; i < rhs.size(); ++i) sum[i] += rhs.coeffs()[i];
  return IntPolynomial(std::move(sum));
}

IntPolynomial poly_mul(const IntPolynomial& lhs, const IntPolynomial& rhs) {
  if (lhs.empty() || rhs.empty()) return {};
  std::vector<BigInt> product(lhs.size() + rhs.size() - 1);
  for (std::size_t i = 0; i < lhs.size(); ++i) {
    if (lhs.coeffs()[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.size(); ++j) product[i + j] += lhs.coeffs()[i] * rhs.coeffs()[j];
  }
  return IntPolynomial(std::move(product));
}

std::string to_string(const IntPolynomial& poly) {
  std::string out = "[";
  for (std::size_t i = 0; i < poly.size(); ++i) {
    if (i != 0) out += ", ";
    out += poly.coeffs()[i].str();
  }
  return out + "]";
}

FieldElement eval_pfield_polynomial(const IntPolynomial& poly, const FieldElement& x) {
  const Prime p = x.modulus();
  FieldElement acc = FieldElement::zero(p);
  for (auto it = poly.coeffs().rbegin(); it != poly.coeffs().rend(); ++it) {
    acc = field_add(field_mul(acc, x), reduce(*it, p));
  }
  return acc;
}

bool pfield_polynomial_root_p(const IntPolynomial& poly, const FieldElement& a) {
  return eval_pfield_polynomial(poly, a).is_zero();
}

bool non_trivial_pfield_polynomial_p(const IntPolynomial& poly, Prime p) {
  return !poly.empty() && !reduce(poly.coeffs().back(), p).is_zero();
}

std::vector<FieldElement> pfield_polynomial_roots(const IntPolynomial& poly, Prime p) {
  require_non_trivial(poly, p);
  std::vector<FieldElement> roots;
  for (std::uint64_t x = 0; x < p.value(); ++x) {
    FieldElement candidate(x, p);
    if (pfield_polynomial_root_p(poly, candidate)) roots.push_back(candidate);
  }
  return roots;
}

std::uint64_t pfield_polynomial_num_roots(const IntPolynomial& poly, Prime p) {
  return pfield_polynomial_roots(poly, p).size();
}

FieldElement root_of_linear(const IntPolynomial& poly, Prime p) {
  if (poly.size() != 2) throw std::invalid_argument("root_of_linear: expected exactly two coefficients");
  require_non_trivial(poly, p);
  return field_neg(field_div(reduce(poly.coeffs()[0], p), reduce(poly.coeffs()[1], p)));
}

SyntheticDivision divide_by_x_plus_a(const IntPolynomial& poly, const BigInt& a) {
  if (poly.empty()) throw std::invalid_argument("divide_by_x_plus_a: empty polynomial");
  const auto& c = poly.coeffs();
  const std::size_t n = c.size() - 1;
  std::vector<BigInt> quotient(n);
  // Running value b_{i-1} = c_i - a * b_i, seeded with the leading coefficient.
  BigInt carry = c[n];
  for (std::size_t i = n; i-- > 0;) {
    quotient[i] = carry;
    carry = c[i] - a * carry;
  }
  return {IntPolynomial(std::move(quotient)), carry};
}

IntPolynomial fermat_poly(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("fermat_poly: n must be >= 1");
  std::vector<BigInt> c(n + 1);
  c.front() = -1;
  c.back() = 1;
  return IntPolynomial(std::move(c));
}

IntPolynomial geometric_block_poly(std::uint64_t c, std::uint64_t d) {
  if (c == 0 || d == 0) throw std::invalid_argument("geometric_block_poly: c and d must be >= 1");
  std::vector<BigInt> coeffs((c - 1) * d + 1);
  for (std::uint64_t i = 0; i < c; ++i) coeffs[i * d] = 1;
  return IntPolynomial(std::move(coeffs));
}

}  // namespace proot
