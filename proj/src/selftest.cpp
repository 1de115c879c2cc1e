#include "proot/selftest.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "proot/field.hpp"
#include "proot/order.hpp"
#include "proot/order_construct.hpp"
#include "proot/polynomial.hpp"
#include "proot/primitive_root.hpp"

namespace proot {

namespace {

using Outcome = std::optional<std::string>;

constexpr std::uint64_t kSeed = 0x5eed'1234'abcdULL;
constexpr int kRandomTrials = 1000;

template <typename... Parts>
std::string describe(const Parts&... parts) {
  std::ostringstream os;
  ((os << parts), ...);
  return os.str();
}

std::vector<Prime> primes(std::uint64_t bound) {
  std::vector<Prime> out;
  for (std::uint64_t p : primes_up_to(bound)) out.emplace_back(p);
  return out;
}

std::vector<std::uint64_t> divisors_of(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 1; d <= n; ++d) {
    if (n % d == 0) out.push_back(d);
  }
  return out;
}

std::vector<std::uint64_t> orders_table(Prime p) {
  std::vector<std::uint64_t> table(p.value(), 0);
  for (std::uint64_t a = 1; a < p.value(); ++a) table[a] = order(FieldElement(a, p));
  return table;
}

// Random polynomial of length 1..max_degree+1 with small signed
// coefficients. If non_trivial, the leading coefficient is nonzero mod p.
IntPolynomial random_poly(std::mt19937_64& rng, std::size_t max_degree, Prime p, bool non_trivial) {
  std::uniform_int_distribution<std::size_t> len_dist(1, max_degree + 1);
  std::uniform_int_distribution<std::int64_t> coeff_dist(-50, 50);
  std::vector<BigInt> c(len_dist(rng));
  for (auto& x : c) x = coeff_dist(rng);
  if (non_trivial) {
    while (FieldElement::from_signed(c.back().convert_to<std::int64_t>(), p).is_zero()) c.back() = coeff_dist(rng);
  }
  return IntPolynomial(std::move(c));
}

Prime random_prime(std::mt19937_64& rng, const std::vector<Prime>& pool) {
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  return pool[pick(rng)];
}

// fieldcore

Outcome fermat_little_theorem(std::uint64_t bound) {
  for (Prime p : primes(bound)) {
    for (std::uint64_t a = 1; a < p; ++a) {
      if (field_pow(FieldElement(a, p), p - 1).residue() != 1) return describe(a, "^(p-1) != 1 mod ", p.value());
    }
  }
  return std::nullopt;
}

Outcome inverse_law(std::uint64_t bound) {
  for (Prime p : primes(bound)) {
    for (std::uint64_t a = 1; a < p; ++a) {
      FieldElement x(a, p);
      if (field_mul(x, field_inv(x)).residue() != 1) return describe("a * inv(a) != 1 for a = ", a, " mod ", p.value());
    }
  }
  return std::nullopt;
}

Outcome integral_domain(std::uint64_t bound) {
  for (Prime p : primes(bound)) {
    for (std::uint64_t a = 1; a < p; ++a) {
      for (std::uint64_t b = 1; b < p; ++b) {
        if (field_mul(FieldElement(a, p), FieldElement(b, p)).is_zero()) {
          return describe(a, " * ", b, " = 0 mod ", p.value());
        }
      }
    }
  }
  return std::nullopt;
}

Outcome least_divisor_is_prime_factor(std::uint64_t bound) {
  for (std::uint64_t k = 2; k <= bound; ++k) {
    const std::uint64_t d = least_divisor(2, k);
    if (k % d != 0) return describe("least_divisor(2, ", k, ") = ", d, " does not divide");
    for (std::uint64_t e = 2; e < d; ++e) {
      if (d % e == 0) return describe("least_divisor(2, ", k, ") = ", d, " is composite");
    }
  }
  return std::nullopt;
}

Outcome gcd_laws(std::uint64_t bound) {
  for (std::uint64_t m = 1; m <= bound; ++m) {
    for (std::uint64_t n = 1; n <= bound; ++n) {
      const std::uint64_t g = gcd(m, n);
      if (m % g != 0 || n % g != 0) return describe("gcd(", m, ", ", n, ") = ", g, " is not a common divisor");
      // g is a common divisor, so it is the greatest iff every common
      // divisor divides it.
      for (std::uint64_t c = 1; c <= std::min(m, n); ++c) {
        if (m % c == 0 && n % c == 0 && g % c != 0) return describe("common divisor ", c, " of ", m, ", ", n, " misses gcd");
      }
      if (relatively_prime(m, n) != (g == 1)) return describe("relatively_prime(", m, ", ", n, ") disagrees with gcd");
    }
  }
  return std::nullopt;
}

// order

Outcome trace_shape(std::uint64_t bound) {
  for (Prime p : primes(bound)) {
    for (std::uint64_t a = 1; a < p; ++a) {
      const PowerTrace t = all_powers(FieldElement(a, p));
      if (t.length() < 1 || t.length() > p - 1) return describe("trace length out of range for ", a, " mod ", p.value());
      std::uint64_t expected = 1;
      for (std::size_t i = 0; i < t.length(); ++i) {
        expected = expected * a % p;
        if (t.entries[i].residue() != expected) return describe("trace entry ", i, " wrong for ", a, " mod ", p.value());
        const bool last = i + 1 == t.length();
        if ((expected == 1) != last) return describe("1 misplaced in trace of ", a, " mod ", p.value());
      }
    }
  }
  return std::nullopt;
}

Outcome smallest_power_is_order(std::uint64_t bound) {
  for (Prime p : primes(bound)) {
    for (std::uint64_t a = 1; a < p; ++a) {
      const FieldElement x(a, p);
      const std::uint64_t ord = order(x);
      std::uint64_t power = 1;
      for (std::uint64_t n = 1; n < p; ++n) {
        power = power * a % p;
        if (power == 1 && !exists_smaller_power_eq_1(x, n) && ord != n) {
          return describe("order(", a, ") mod ", p.value(), " = ", ord, " but least n is ", n);
        }
      }
    }
  }
  return std::nullopt;
}

Outcome order_divides_group_order(std::uint64_t bound) {
  for (Prime p : primes(bound)) {
    for (std::uint64_t a = 1; a < p; ++a) {
      if (!divides(order(FieldElement(a, p)), p - 1)) return describe("order(", a, ") does not divide ", p - 1);
    }
  }
  return std::nullopt;
}

Outcome order_of_inverse(std::uint64_t bound) {
  for (Prime p : primes(bound)) {
    for (std::uint64_t a = 1; a < p; ++a) {
      const FieldElement x(a, p);
      if (order(field_inv(x)) != order(x)) return describe("order(inv(", a, ")) != order(", a, ") mod ", p.value());
    }
  }
  return std::nullopt;
}

Outcome trace_periodicity(std::uint64_t bound) {
  for (Prime p : primes(bound)) {
    for (std::uint64_t a = 1; a < p; ++a) {
      const FieldElement x(a, p);
      const std::uint64_t ord = order(x);
      for (std::uint64_t t = 0; t <= 3; ++t) {
        for (std::uint64_t r = 0; r < ord; ++r) {
          if (field_pow(x, ord * t + r) != field_pow(x, r)) return describe(a, "^(", ord * t + r, ") mod ", p.value());
        }
      }
    }
  }
  return std::nullopt;
}

Outcome order_fast_matches_trace(std::uint64_t bound) {
  for (Prime p : primes(bound)) {
    for (std::uint64_t a = 1; a < p; ++a) {
      const FieldElement x(a, p);
      if (order_fast(x) != order(x)) return describe("order_fast(", a, ") mod ", p.value());
    }
  }
  return std::nullopt;
}

// polycong

Outcome root_of_product(std::uint64_t bound) {
  const auto pool = primes(bound);
  std::mt19937_64 rng(kSeed);
  for (int trial = 0; trial < kRandomTrials; ++trial) {
    const Prime p = random_prime(rng, pool);
    const IntPolynomial f = random_poly(rng, 4, p, false);
    const IntPolynomial g = random_poly(rng, 4, p, false);
    const IntPolynomial fg = poly_mul(f, g);
    for (std::uint64_t x = 0; x < p; ++x) {
      const FieldElement v(x, p);
      if (pfield_polynomial_root_p(fg, v) && !pfield_polynomial_root_p(f, v) && !pfield_polynomial_root_p(g, v)) {
        return describe(x, " is a root of ", to_string(fg), " but of neither factor mod ", p.value());
      }
    }
  }
  return std::nullopt;
}

Outcome root_count_subadditive(std::uint64_t bound) {
  const auto pool = primes(bound);
  std::mt19937_64 rng(kSeed + 1);
  for (int trial = 0; trial < kRandomTrials; ++trial) {
    const Prime p = random_prime(rng, pool);
    const IntPolynomial f = random_poly(rng, 4, p, true);
    const IntPolynomial g = random_poly(rng, 4, p, true);
    const IntPolynomial fg = poly_mul(f, g);
    if (pfield_polynomial_num_roots(fg, p) > pfield_polynomial_num_roots(f, p) + pfield_polynomial_num_roots(g, p)) {
      return describe("roots(", to_string(f), " * ", to_string(g), ") mod ", p.value());
    }
  }
  return std::nullopt;
}

Outcome synthetic_division_identity(std::uint64_t bound) {
  std::mt19937_64 rng(kSeed + 2);
  std::uniform_int_distribution<std::int64_t> shift(-static_cast<std::int64_t>(bound), static_cast<std::int64_t>(bound));
  const Prime two(2);
  for (int trial = 0; trial < kRandomTrials; ++trial) {
    const IntPolynomial f = random_poly(rng, 12, two, false);
    const BigInt a = shift(rng);
    const auto [quotient, remainder] = divide_by_x_plus_a(f, a);
    if (quotient.size() + 1 != f.size()) return describe("quotient length wrong for ", to_string(f));
    if (poly_mul(IntPolynomial({a, BigInt(1)}), quotient) + IntPolynomial({remainder}) != f) {
      return describe(to_string(f), " != (x + ", a, ") * ", to_string(quotient), " + ", remainder);
    }
  }
  return std::nullopt;
}

Outcome eval_with_root_factorization(std::uint64_t bound) {
  const auto pool = primes(bound);
  std::mt19937_64 rng(kSeed + 3);
  for (int trial = 0; trial < kRandomTrials; ++trial) {
    const Prime p = random_prime(rng, pool);
    // Force a root r by multiplying a random polynomial by (x - r).
    std::uniform_int_distribution<std::uint64_t> pick(0, p - 1);
    const std::uint64_t r = pick(rng);
    const IntPolynomial f = poly_mul(IntPolynomial({-static_cast<std::int64_t>(r), 1}), random_poly(rng, 5, p, false));
    const FieldElement root(r, p);
    if (!pfield_polynomial_root_p(f, root)) return describe(r, " should be a root of ", to_string(f));
    const IntPolynomial quotient = divide_by_x_plus_a(f, -BigInt(r)).quotient;
    const IntPolynomial linear({-static_cast<std::int64_t>(r), 1});
    for (std::uint64_t x = 0; x < p; ++x) {
      const FieldElement v(x, p);
      if (eval_pfield_polynomial(f, v) != field_mul(eval_pfield_polynomial(linear, v), eval_pfield_polynomial(quotient, v))) {
        return describe("factorization of ", to_string(f), " at root ", r, " fails at x = ", x, " mod ", p.value());
      }
    }
  }
  return std::nullopt;
}

Outcome degree_bound(std::uint64_t bound) {
  const auto pool = primes(bound);
  std::mt19937_64 rng(kSeed + 4);
  int checked = 0;
  while (checked < kRandomTrials) {
    const Prime p = random_prime(rng, pool);
    const IntPolynomial f = random_poly(rng, 8, p, true);
    if (f.size() < 2) continue;
    ++checked;
    if (pfield_polynomial_num_roots(f, p) > f.degree()) return describe(to_string(f), " has too many roots mod ", p.value());
  }
  return std::nullopt;
}

Outcome fermat_factorization_identity(std::uint64_t) {
  for (std::uint64_t c = 1; c <= 12; ++c) {
    for (std::uint64_t d = 1; d <= 12; ++d) {
      if (poly_mul(fermat_poly(d), geometric_block_poly(c, d)) != fermat_poly(c * d)) {
        return describe("(x^", d, " - 1) * block(", c, ", ", d, ") != x^", c * d, " - 1");
      }
    }
  }
  return std::nullopt;
}

Outcome fermat_poly_divisor_root_counts(std::uint64_t bound) {
  for (Prime p : primes(bound)) {
    for (std::uint64_t d : divisors_of(p - 1)) {
      const std::uint64_t count = pfield_polynomial_num_roots(fermat_poly(d), p);
      if (count != d) return describe("x^", d, " - 1 has ", count, " roots mod ", p.value());
    }
  }
  return std::nullopt;
}

Outcome linear_unique_root(std::uint64_t bound) {
  for (Prime p : primes(bound)) {
    for (std::uint64_t a1 = 1; a1 < p; ++a1) {
      for (std::uint64_t a0 = 0; a0 < p; ++a0) {
        const IntPolynomial f({static_cast<std::int64_t>(a0), static_cast<std::int64_t>(a1)});
        const auto roots = pfield_polynomial_roots(f, p);
        if (roots.size() != 1 || roots.front() != root_of_linear(f, p)) {
          return describe(to_string(f), " does not have exactly the root -a0/a1 mod ", p.value());
        }
      }
    }
  }
  return std::nullopt;
}

// orderconstruct

Outcome factors_of_prime_powers(std::uint64_t) {
  for (std::uint64_t q : primes_up_to(13)) {
    for (std::uint64_t n = 0; n <= 6; ++n) {
      const std::uint64_t qn = *checked_power(q, n);
      for (std::uint64_t x : divisors_of(qn)) {
        if (x != *checked_power(q, number_of_powers(x, q))) return describe(x, " | ", q, "^", n, " is not a power of ", q);
      }
    }
  }
  return std::nullopt;
}

Outcome order_is_prime_power(std::uint64_t bound) {
  for (Prime p : primes(bound)) {
    for (std::uint64_t q : primes_up_to(p)) {
      for (std::uint64_t a = 1; a < p; ++a) {
        const FieldElement x(a, p);
        for (std::uint64_t n = 1, qn = q; qn <= p - 1; ++n, qn *= q) {
          if (field_pow(x, qn).residue() == 1 && field_pow(x, qn / q).residue() != 1 && order(x) != qn) {
            return describe("order(", a, ") mod ", p.value(), " should be ", q, "^", n);
          }
        }
      }
    }
  }
  return std::nullopt;
}

Outcome power_chain(std::uint64_t bound) {
  for (Prime p : primes(bound)) {
    for (std::uint64_t q : primes_up_to(p)) {
      for (std::uint64_t a = 1; a < p; ++a) {
        const FieldElement x(a, p);
        bool seen_one = false;
        for (std::uint64_t i = 0, qi = 1; i <= 8 && qi <= 4 * p; ++i, qi *= q) {
          const bool is_one = field_pow(x, qi).residue() == 1;
          if (seen_one && !is_one) return describe(a, "^(", q, "^", i, ") != 1 mod ", p.value(), " after an earlier 1");
          seen_one = seen_one || is_one;
        }
      }
    }
  }
  return std::nullopt;
}

Outcome witness_order_and_minimality(std::uint64_t bound) {
  for (Prime p : primes(bound)) {
    const auto orders = orders_table(p);
    for (std::uint64_t q : primes_up_to(p - 1)) {
      const std::uint64_t max_n = number_of_powers(p - 1, q);
      for (std::uint64_t n = 1, qn = q; n <= max_n; ++n, qn *= q) {
        const FieldElement w = witness_with_order_q_n(Prime(q), n, p);
        if (orders[w.residue()] != qn) return describe("witness(", q, ", ", n, ", ", p.value(), ") has wrong order");
        for (std::uint64_t x = 1; x < w.residue(); ++x) {
          if (orders[x] == qn) return describe("witness(", q, ", ", n, ", ", p.value(), ") is not least; ", x, " works");
        }
      }
    }
  }
  return std::nullopt;
}

Outcome witness_root_count(std::uint64_t bound) {
  for (Prime p : primes(bound)) {
    for (std::uint64_t q : primes_up_to(p - 1)) {
      const std::uint64_t max_n = number_of_powers(p - 1, q);
      for (std::uint64_t n = 1, qn = q; n <= max_n; ++n, qn *= q) {
        std::uint64_t solutions = 0;
        for (std::uint64_t x = 1; x < p; ++x) solutions += field_pow(FieldElement(x, p), qn).residue() == 1;
        if (solutions != qn || pfield_polynomial_num_roots(fermat_poly(qn), p) != qn) {
          return describe("x^", qn, " = 1 mod ", p.value(), " has ", solutions, " solutions");
        }
      }
    }
  }
  return std::nullopt;
}

Outcome product_order(std::uint64_t bound) {
  for (Prime p : primes(bound)) {
    const auto orders = orders_table(p);
    for (std::uint64_t a = 1; a < p; ++a) {
      for (std::uint64_t b = 1; b < p; ++b) {
        if (gcd(orders[a], orders[b]) != 1) continue;
        const FieldElement ab = product_order_compose(FieldElement(a, p), FieldElement(b, p));
        if (orders[ab.residue()] != orders[a] * orders[b]) return describe("order(", a, " * ", b, ") mod ", p.value());
      }
    }
  }
  return std::nullopt;
}

// proot

Outcome primitive_root_has_full_order(std::uint64_t bound) {
  for (Prime p : primes(bound)) {
    const FieldElement g = primitive_root(p);
    if (order(g) != p - 1 || !is_primitive_root(g)) return describe("primitive_root(", p.value(), ") = ", g.residue());
  }
  return std::nullopt;
}

Outcome primitive_root_aux_orders(std::uint64_t bound) {
  for (Prime p : primes(bound)) {
    for (std::uint64_t k : divisors_of(p - 1)) {
      if (order(primitive_root_aux(k, p)) != k) return describe("primitive_root_aux(", k, ", ", p.value(), ")");
    }
  }
  return std::nullopt;
}

Outcome aux_recursion_side_conditions(std::uint64_t bound) {
  Outcome failure;
  for (Prime p : primes(bound)) {
    const AuxObserver observer = [&](const AuxStep& s) {
      if (failure) return;
      const std::uint64_t qn = s.factor.value();
      const bool ok = s.cofactor * qn == s.k && s.cofactor < s.k && divides(s.cofactor, p - 1) &&
                      gcd(qn, s.cofactor) == 1 && !s.witness.is_zero() && !s.rest.is_zero() &&
                      !s.result.is_zero() && order(s.witness) == qn && order(s.rest) == s.cofactor;
      if (!ok) failure = describe("side condition fails at k = ", s.k, " mod ", p.value());
    };
    primitive_root_aux(p - 1, p, observer);
    if (failure) return failure;
  }
  return std::nullopt;
}

Outcome decomposition_trail(std::uint64_t bound) {
  for (Prime p : primes(bound)) {
    const PrimitiveRootResult r = decompose_with_witnesses(p);
    std::uint64_t product = 1;
    FieldElement root = FieldElement::one(p);
    for (std::size_t i = 0; i < r.factors.size(); ++i) {
      product *= r.factors[i].value();
      root = field_mul(root, r.witnesses[i]);
      if (order(r.witnesses[i]) != r.factors[i].value()) return describe("trail witness ", i, " mod ", p.value());
    }
    if (product != p - 1 || root != r.root || r.root != primitive_root(p)) return describe("trail mod ", p.value());
  }
  return std::nullopt;
}

Outcome oracle_agreement(std::uint64_t bound) {
  for (Prime p : primes(bound)) {
    for (std::uint64_t g = 0; g < p; ++g) {
      const FieldElement x(g, p);
      const bool by_order = !x.is_zero() && order(x) == p - 1;
      if (is_primitive_root(x) != by_order) return describe("oracle disagrees at g = ", g, " mod ", p.value());
    }
  }
  return std::nullopt;
}

Outcome primitive_root_count_is_totient(std::uint64_t bound) {
  for (Prime p : primes(bound)) {
    if (count_primitive_roots(p) != totient(p - 1)) return describe("count mod ", p.value(), " != phi(", p - 1, ")");
  }
  return std::nullopt;
}

}  // namespace

const std::vector<Property>& selftest_properties() {
  static const std::vector<Property> properties = {
      {"fermat_little_theorem", "fieldcore", fermat_little_theorem},
      {"inverse_law", "fieldcore", inverse_law},
      {"integral_domain", "fieldcore", integral_domain},
      {"least_divisor_is_prime_factor", "fieldcore", least_divisor_is_prime_factor},
      {"gcd_laws", "fieldcore", gcd_laws},
      {"trace_shape", "order", trace_shape},
      {"smallest_power_is_order", "order", smallest_power_is_order},
      {"order_divides_group_order", "order", order_divides_group_order},
      {"order_of_inverse", "order", order_of_inverse},
      {"trace_periodicity", "order", trace_periodicity},
      {"order_fast_matches_trace", "order", order_fast_matches_trace},
      {"root_of_product", "polycong", root_of_product},
      {"root_count_subadditive", "polycong", root_count_subadditive},
      {"synthetic_division_identity", "polycong", synthetic_division_identity},
      {"eval_with_root_factorization", "polycong", eval_with_root_factorization},
      {"degree_bound", "polycong", degree_bound},
      {"fermat_factorization_identity", "polycong", fermat_factorization_identity},
      {"fermat_poly_divisor_root_counts", "polycong", fermat_poly_divisor_root_counts},
      {"linear_unique_root", "polycong", linear_unique_root},
      {"factors_of_prime_powers", "orderconstruct", factors_of_prime_powers},
      {"order_is_prime_power", "orderconstruct", order_is_prime_power},
      {"power_chain", "orderconstruct", power_chain},
      {"witness_order_and_minimality", "orderconstruct", witness_order_and_minimality},
      {"witness_root_count", "orderconstruct", witness_root_count},
      {"product_order", "orderconstruct", product_order},
      {"primitive_root_has_full_order", "proot", primitive_root_has_full_order},
      {"primitive_root_aux_orders", "proot", primitive_root_aux_orders},
      {"aux_recursion_side_conditions", "proot", aux_recursion_side_conditions},
      {"decomposition_trail", "proot", decomposition_trail},
      {"oracle_agreement", "proot", oracle_agreement},
      {"primitive_root_count_is_totient", "proot", primitive_root_count_is_totient},
  };
  return properties;
}

std::vector<PropertyResult> run_selftest(std::uint64_t bound) {
  if (bound < 2) throw std::invalid_argument("selftest bound must be >= 2");
  std::vector<PropertyResult> results;
  for (const Property& property : selftest_properties()) {
    Outcome outcome = property.check(bound);
    results.push_back({property.name, !outcome.has_value(), outcome.value_or("")});
  }
  return results;
}

}  // namespace proot
