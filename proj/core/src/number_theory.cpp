#include "dynatomic/number_theory.hpp"

#include <limits>
#include <numeric>

#include "dynatomic/error.hpp"

namespace dynatomic {

std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n) {
  if (n < 1) throw DomainError("factorize: n must be positive");
  std::vector<std::pair<std::int64_t, int>> out;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::vector<std::int64_t> divisors(std::int64_t n) {
  if (n < 1) throw DomainError("divisors: n must be positive");
  std::vector<std::int64_t> small, large;
  for (std::int64_t i = 1; i * i <= n; ++i) {
    if (n % i != 0) continue;
    small.push_back(i);
    if (i != n / i) large.push_back(n / i);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

int moebius(std::int64_t n) {
  if (n < 1) throw DomainError("moebius: n must be positive");
  int sign = 1;
  for (auto [p, e] : factorize(n)) {
    if (e > 1) return 0;
    sign = -sign;
  }
  return sign;
}

std::int64_t totient(std::int64_t n) {
  std::int64_t t = n;
  for (auto [p, e] : factorize(n)) t = t / p * (p - 1);
  return t;
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

std::int64_t multiplicative_order(std::int64_t a, std::int64_t n) {
  if (n < 1) throw DomainError("multiplicative_order: modulus must be positive");
  if (n == 1) return 1;
  a %= n;
  if (a < 0) a += n;
  if (std::gcd(a, n) != 1) throw DomainError("multiplicative_order: gcd(a, n) != 1");
  std::int64_t k = 1;
  __int128 x = a;
  while (x != 1) {
    x = x * a % n;
    ++k;
  }
  return k;
}

mpz_class ipow(std::int64_t base, std::uint64_t exp) {
  mpz_class b = static_cast<long>(base);
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), exp);
  return r;
}

std::int64_t checked_pow(std::int64_t base, std::uint64_t exp) {
  mpz_class r = ipow(base, exp);
  if (!r.fits_slong_p()) throw DomainError("integer overflow in power");
  return r.get_si();
}

std::vector<std::int64_t> cyclotomic_polynomial(std::int64_t d) {
  if (d < 1) throw DomainError("cyclotomic_polynomial: d must be positive");
  // x^d - 1 divided by every Phi_e with e | d, e < d; all divisors are monic.
  std::vector<std::int64_t> num(static_cast<std::size_t>(d) + 1, 0);
  num[0] = -1;
  num[static_cast<std::size_t>(d)] = 1;
  for (std::int64_t e : divisors(d)) {
    if (e == d) continue;
    auto den = cyclotomic_polynomial(e);
    const std::size_t dn = den.size() - 1;
    std::vector<std::int64_t> quot(num.size() - dn, 0);
    for (std::size_t i = num.size(); i-- > dn;) {
      std::int64_t q = num[i];
      quot[i - dn] = q;
      for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= q * den[j];
    }
    num = std::move(quot);
  }
  return num;
}

}  // namespace dynatomic
