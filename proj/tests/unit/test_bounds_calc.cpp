#include <doctest.h>

#include <random>

#include "dynatomic/bounds.hpp"
#include "dynatomic/dynatomic.hpp"

using namespace dynatomic;

TEST_CASE("castelnuovo-severi") {
  CHECK(castelnuovo_severi(0, 0, 2, 3) == 2);
  CHECK(castelnuovo_severi(0, 1, 2, 2) == 3);
  for (long g1 : {0L, 4L, 17L}) CHECK(castelnuovo_severi(g1, 0, 1, 1) == g1);
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<long> gd(0, 100000), dd(1, 1000);
  for (int i = 0; i < 1000; ++i) {
    const mpz_class g1 = gd(rng), g2 = gd(rng), d1 = dd(rng), d2 = dd(rng);
    REQUIRE(castelnuovo_severi(g1, g2, d1, d2) == castelnuovo_severi(g2, g1, d2, d1));
    REQUIRE(castelnuovo_severi(g1, g2, d1, d2) == d1 * g1 + d2 * g2 + (d1 - 1) * (d2 - 1));
  }
}

TEST_CASE("gonality of the periodic curve") {
  const auto user = x0_case_bounds(2, 6, mpz_class(10));
  CHECK(user.value == 3);
  CHECK(user.mode == BoundMode::UserSuppliedGenus);
  REQUIRE(user.leading_coefficient.has_value());
  CHECK(*user.leading_coefficient == mpq_class(1, 4));

  for (long d = 2; d <= 5; ++d)
    for (long n = 1; n <= 10; ++n) {
      if (deg_D0(d, n) == 1) continue;
      const auto r = x0_case_bounds(d, n, std::nullopt);
      REQUIRE(r.mode == BoundMode::AsymptoticLeadingTerm);
      REQUIRE_FALSE(r.caveats.empty());
      mpq_class lead(d - 1, 2 * d);
      lead.canonicalize();
      REQUIRE(*r.leading_coefficient == lead);
      REQUIRE(r.value <= deg_D0(d, n));
      REQUIRE(r.value >= 1);
    }
  // D0 = 1 leaves no room for the case split.
  CHECK(deg_D0(2, 2) == 1);
  CHECK_THROWS_AS(x0_case_bounds(2, 2, mpz_class(0)), DomainError);
  CHECK_THROWS_AS(x0_case_bounds(2, 0, std::nullopt), DomainError);
}

TEST_CASE("gonality along the preperiodic tower") {
  CHECK(tower_recursion(2, 1, 1, 2).value == 1);
  CHECK(tower_recursion(2, 1, 1, 6).value == 16);
  CHECK(tower_recursion(2, 1, 1, 6).derivation.size() == 6);
  const auto seq = tower_recursion(2, 1, 1, 6).sequence;
  CHECK(seq == std::vector<mpz_class>{1, 1, 2, 4, 8, 16});
  for (long d = 2; d <= 4; ++d)
    for (long n = 1; n <= 3; ++n) {
      mpq_class prev = tower_recursion(d, n, 1, 3).value;
      for (long m = 4; m <= 14; ++m) {
        const auto v = tower_recursion(d, n, 1, m).value;
        REQUIRE(v >= prev);
        prev = v;
      }
    }
  CHECK(tower_recursion(2, 1, 1, 40).value > 100000);
  const std::vector<mpz_class> genera{0, 0, 1, 5};
  const auto r = tower_recursion(2, 1, 1, 4, genera);
  CHECK(r.mode == BoundMode::UserSuppliedGenus);
  // gamma_2 = min(2, 1) ; gamma_3 = min(2, 1 + 1) ; gamma_4 = min(4, 1 + 3)
  CHECK(r.value == 4);
  CHECK_THROWS_AS(tower_recursion(2, 1, 1, 1), DomainError);
  CHECK_THROWS_AS(tower_recursion(2, 1, 1, 4, std::vector<mpz_class>{0, 0}), DomainError);
}

TEST_CASE("preperiodic point count") {
  CHECK(preperiodic_count_bound(2, 3) == 24);
  CHECK(preperiodic_count_bound(2, 1) == 2);
  CHECK(preperiodic_count_bound(3, 2) == 18);
  for (long d = 2; d <= 3; ++d)
    for (long n = 1; n <= 6; ++n) {
      const auto f = detail::integer_iterates(d, n);
      long total = 0;
      for (long m = 0; m < n; ++m) total += (f[static_cast<std::size_t>(n)] - f[static_cast<std::size_t>(m)]).deg_z();
      REQUIRE(preperiodic_count_bound(d, n) == total);
    }
}

TEST_CASE("constant field bound") {
  CHECK(finite_field_constant_bound(3, 2) == 9);
  CHECK(finite_field_constant_bound(7, 1) == 7);
  CHECK(finite_field_constant_bound(2, 10) == 1024);
  CHECK_THROWS_AS(finite_field_constant_bound(1, 2), DomainError);
}

TEST_CASE("ceilings of rationals") {
  CHECK(ceil_div(mpq_class(10, 8)) == 2);
  CHECK(ceil_div(mpq_class(-3, 2)) == -1);
  CHECK(ceil_div(mpq_class(4)) == 4);
  CHECK(to_string(BoundMode::AsymptoticLeadingTerm) == "asymptotic-leading-term");
}
