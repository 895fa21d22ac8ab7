#include <doctest.h>

#include <numeric>
#include <random>

#include "dynatomic/cyclotomic.hpp"
#include "dynatomic/finite_field.hpp"
#include "dynatomic/number_theory.hpp"
#include "dynatomic/rings.hpp"

using namespace dynatomic;

namespace {

bool trial_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t k = 2; k * k <= n; ++k)
    if (n % k == 0) return false;
  return true;
}

// Integer polynomial product, constant term first.
std::vector<std::int64_t> mul(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) {
  std::vector<std::int64_t> out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

}  // namespace

TEST_CASE("moebius values") {
  CHECK(moebius(1) == 1);
  CHECK(moebius(4) == 0);
  CHECK(moebius(6) == 1);
  CHECK(moebius(30) == -1);
  CHECK_THROWS_AS(moebius(0), DomainError);
}

TEST_CASE("moebius sums over divisors vanish except at 1") {
  for (std::int64_t n = 1; n <= 10000; ++n) {
    int sum = 0;
    for (auto e : divisors(n)) sum += moebius(e);
    REQUIRE(sum == (n == 1 ? 1 : 0));
  }
}

TEST_CASE("totient, primality and factorization against brute force") {
  for (std::int64_t n = 1; n <= 500; ++n) {
    std::int64_t count = 0;
    for (std::int64_t k = 1; k <= n; ++k) count += std::gcd(k, n) == 1;
    REQUIRE(totient(n) == count);
    REQUIRE(is_prime(n) == trial_prime(n));
    std::int64_t back = 1;
    for (auto [p, e] : factorize(n))
      for (int i = 0; i < e; ++i) back *= p;
    REQUIRE(back == n);
  }
}

TEST_CASE("x^d - 1 is the product of cyclotomic polynomials of the divisors") {
  for (std::int64_t d = 1; d <= 30; ++d) {
    std::vector<std::int64_t> prod{1};
    for (auto e : divisors(d)) prod = mul(prod, cyclotomic_polynomial(e));
    std::vector<std::int64_t> expected(static_cast<std::size_t>(d + 1), 0);
    expected[0] = -1;
    expected[static_cast<std::size_t>(d)] = 1;
    REQUIRE(prod == expected);
  }
}

TEST_CASE("rationals are parsed only in lowest terms") {
  const auto q = parse_rational("-3/2");
  CHECK(q == mpq_class(-3, 2));
  CHECK(q.get_den() > 0);
  CHECK_THROWS_AS(parse_rational("6/-4"), DomainError);
  CHECK_THROWS_AS(parse_rational("6/4"), DomainError);
  CHECK_THROWS_AS(parse_rational("3/1"), DomainError);
  CHECK(parse_integer("-17") == -17);
  CHECK_THROWS(parse_integer("1.5"));
  CHECK_THROWS(parse_rational("1/0"));
}

TEST_CASE("cyclotomic contexts") {
  SUBCASE("d = 2") {
    const auto K = build_cyclotomic(2);
    CHECK(K.dimension() == 1);
    CHECK(K.zeta() == K.from_int(-1));
    REQUIRE(K.nontrivial_roots().size() == 1);
    CHECK(K.nontrivial_roots()[0] == K.from_int(-1));
  }
  SUBCASE("d = 3") {
    const auto K = build_cyclotomic(3);
    const auto z = K.zeta();
    CHECK(K.is_zero(K.add(K.add(K.mul(z, z), z), K.one())));
    CHECK(K.nontrivial_roots().size() == 2);
  }
  SUBCASE("d = 4") {
    const auto K = build_cyclotomic(4);
    const auto z = K.zeta();
    CHECK(K.mul(z, z) == K.from_int(-1));
    CHECK(K.nontrivial_roots().size() == 3);
  }
  SUBCASE("roots are listed as zeta^1 .. zeta^(d-1)") {
    const auto K = build_cyclotomic(5);
    const auto roots = K.nontrivial_roots();
    auto power = K.one();
    for (std::size_t j = 0; j < roots.size(); ++j) {
      power = K.mul(power, K.zeta());
      CHECK(roots[j] == power);
    }
    CHECK(K.is_one(K.mul(power, K.zeta())));
  }
}

TEST_CASE("cyclotomic field axioms on random samples") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> coef(-20, 20);
  for (long d : {3L, 4L, 5L, 12L}) {
    const CyclotomicField K(d);
    auto sample = [&] {
      CyclotomicField::value_type a(K.dimension());
      for (auto& x : a) x = mpq_class(coef(rng), std::abs(coef(rng)) + 1);
      for (auto& x : a) x.canonicalize();
      return a;
    };
    for (int i = 0; i < 250; ++i) {
      const auto a = sample(), b = sample(), c = sample();
      REQUIRE(K.mul(K.mul(a, b), c) == K.mul(a, K.mul(b, c)));
      REQUIRE(K.mul(a, K.add(b, c)) == K.add(K.mul(a, b), K.mul(a, c)));
      REQUIRE(K.mul(a, b) == K.mul(b, a));
      if (!K.is_zero(a)) REQUIRE(K.is_one(K.mul(a, K.inv(a))));
    }
  }
}

TEST_CASE("finite field contexts") {
  SUBCASE("p = 3, d = 2") {
    const auto F = build_fq(3, 2);
    CHECK(F.q() == 3);
    CHECK(F.k() == 1);
    CHECK(F.gen_zeta() == F.from_int(-1));
  }
  SUBCASE("p = 2, d = 3") {
    const auto F = build_fq(2, 3);
    CHECK(F.q() == 4);
    CHECK(F.k() == 2);
    CHECK(F.modulus() == std::vector<std::int64_t>{1, 1, 1});
  }
  SUBCASE("wild characteristic is rejected") {
    CHECK_THROWS_AS(build_fq(2, 2), DomainError);
    CHECK_THROWS_AS(build_fq(3, 6), DomainError);
    CHECK_THROWS_AS(build_fq(4, 3), DomainError);
  }
  SUBCASE("k is the order of p modulo d") {
    for (auto [p, d] : {std::pair{2, 7}, std::pair{3, 4}, std::pair{5, 3}, std::pair{7, 9}, std::pair{2, 5}}) {
      const auto F = build_fq(p, d);
      CHECK(F.k() == multiplicative_order(p, d));
      std::int64_t q = 1;
      for (int i = 0; i < F.k(); ++i) q *= p;
      CHECK(F.q() == q);
      CHECK((F.q() - 1) % d == 0);
    }
  }
}

TEST_CASE("gen_zeta has exact order d") {
  for (auto [p, d] : {std::pair{3, 2}, std::pair{2, 3}, std::pair{5, 4}, std::pair{2, 7}, std::pair{7, 3}, std::pair{3, 8}}) {
    const auto F = build_fq(p, d);
    CHECK(F.is_one(F.pow(F.gen_zeta(), d)));
    for (int j = 1; j < d; ++j) CHECK_FALSE(F.is_one(F.pow(F.gen_zeta(), j)));
  }
}

TEST_CASE("the modulus is irreducible of degree k") {
  for (auto [p, d] : {std::pair{2, 3}, std::pair{2, 7}, std::pair{3, 4}, std::pair{5, 3}, std::pair{3, 13}}) {
    const auto F = build_fq(p, d);
    const auto& mod = F.modulus();
    REQUIRE(static_cast<std::int64_t>(mod.size()) == F.k() + 1);
    CHECK(mod.back() == 1);
    if (F.k() <= 3) {
      // degree <= 3: irreducible iff no root in F_p
      for (std::int64_t x = 0; x < p; ++x) {
        std::int64_t v = 0;
        for (std::size_t i = mod.size(); i-- > 0;) v = (v * x + mod[i]) % p;
        CHECK(v != 0);
      }
    }
  }
}

TEST_CASE("finite field axioms on random samples") {
  for (auto [p, d] : {std::pair{3, 2}, std::pair{2, 3}, std::pair{5, 8}, std::pair{7, 3}}) {
    const auto F = build_fq(p, d);
    std::mt19937_64 rng(static_cast<unsigned>(p * 100 + d));
    std::uniform_int_distribution<std::uint32_t> pick(0, static_cast<std::uint32_t>(F.q() - 1));
    for (int i = 0; i < 1000; ++i) {
      const FiniteField::Elem a{pick(rng)}, b{pick(rng)}, c{pick(rng)};
      REQUIRE(F.add(F.add(a, b), c) == F.add(a, F.add(b, c)));
      REQUIRE(F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c)));
      REQUIRE(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
      REQUIRE(F.is_zero(F.add(a, F.neg(a))));
      if (!F.is_zero(a)) REQUIRE(F.is_one(F.mul(a, F.inv(a))));
    }
  }
}

TEST_CASE("finite field coordinates round trip") {
  const auto F = build_fq(3, 4);
  for (const auto& a : F.elements()) {
    CHECK(F.from_coords(F.coords(a)) == a);
    CHECK(F.parse(F.format(a)) == a);
  }
}

TEST_CASE("contexts compare by parameters") {
  CHECK(build_fq(5, 2).same_context(build_fq(5, 2)));
  CHECK_FALSE(build_fq(5, 2).same_context(build_fq(7, 2)));
  CHECK(CyclotomicField(3).same_context(CyclotomicField(3)));
}
