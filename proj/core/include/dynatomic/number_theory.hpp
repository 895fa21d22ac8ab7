#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace dynatomic {

/// Prime factorization as (prime, exponent) pairs in increasing prime order.
std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n);

/// Positive divisors of n in increasing order.
std::vector<std::int64_t> divisors(std::int64_t n);

int moebius(std::int64_t n);
std::int64_t totient(std::int64_t n);
bool is_prime(std::int64_t n);

/// Multiplicative order of a modulo n (gcd(a, n) = 1 required).
std::int64_t multiplicative_order(std::int64_t a, std::int64_t n);

/// base^exp as an arbitrary precision integer.
mpz_class ipow(std::int64_t base, std::uint64_t exp);

/// base^exp, throwing DomainError when the result does not fit in int64.
std::int64_t checked_pow(std::int64_t base, std::uint64_t exp);

/// Integer coefficients (constant term first) of the d-th cyclotomic polynomial.
std::vector<std::int64_t> cyclotomic_polynomial(std::int64_t d);

}  // namespace dynatomic
