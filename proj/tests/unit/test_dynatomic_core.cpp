#include <doctest.h>

#include "dynatomic/dynatomic.hpp"
#include "dynatomic/number_theory.hpp"
#include "dynatomic/poly_text.hpp"

using namespace dynatomic;

namespace {

using ZB = BivarPoly<IntegerRing>;
const IntegerRing Z;

ZB zz() { return ZB::z(Z); }
ZB cc() { return ZB::c(Z); }
ZB k(long a) { return ZB::constant(Z, a); }

auto fam(long d) { return make_family(d, IntegerRing{}); }

bool monic_in_z(const ZB& p) { return p.row(static_cast<std::size_t>(p.deg_z())) == UniPoly<IntegerRing>::constant(Z, 1); }

// Independent Moebius sum for D1.
std::int64_t brute_D1(std::int64_t d, std::int64_t n) {
  std::int64_t s = 0;
  for (std::int64_t e = 1; e <= n; ++e) {
    if (n % e) continue;
    std::int64_t pw = 1;
    for (std::int64_t i = 0; i < e; ++i) pw *= d;
    std::int64_t m = n / e, mu = 1;
    for (std::int64_t q = 2; q * q <= m; ++q)
      if (m % q == 0) {
        m /= q;
        if (m % q == 0) mu = 0;
        mu = -mu;
      }
    if (m > 1) mu = -mu;
    s += mu * pw;
  }
  return s;
}

}  // namespace

TEST_CASE("iterates") {
  CHECK(iterate(fam(2), 0) == zz());
  CHECK(iterate(fam(2), 2) == zz().pow(4) + k(2) * cc() * zz().pow(2) + cc() * cc() + cc());
  CHECK(iterate(fam(3), 1) == zz().pow(3) + cc());
  for (long d : {2L, 3L, 4L})
    for (long n = 1; n <= 4; ++n) {
      const auto f = iterate(fam(d), n);
      CHECK(f.deg_z() == ipow(d, n).get_si());
      CHECK(f.deg_c() == ipow(d, n - 1).get_si());
    }
  CHECK_THROWS_AS(iterate(fam(2), -1), DomainError);
  CHECK_THROWS_AS(make_family(1, IntegerRing{}), DomainError);
}

TEST_CASE("iterates respect the degree cap") {
  CHECK_THROWS_AS(iterate(make_family(2, IntegerRing{}, 100), 7), CapExceeded);
}

TEST_CASE("dynatomic polynomials") {
  CHECK(phi(fam(2), 1) == zz() * zz() - zz() + cc());
  CHECK(phi(fam(2), 2) == zz() * zz() + zz() + cc() + k(1));
  const auto p32 = phi(fam(3), 2);
  CHECK(p32.deg_z() == 6);
  CHECK(monic_in_z(p32));
  CHECK_THROWS_AS(phi(fam(2), 0), DomainError);
}

TEST_CASE("product identity") {
  CHECK(check_product_identity(fam(2), 6));
  CHECK(check_product_identity(fam(2), 1));
  CHECK(check_product_identity(fam(3), 4));
}

TEST_CASE("degree of phi matches the Moebius sum") {
  for (long d = 2; d <= 4; ++d)
    for (long n = 1; n <= 8 && ipow(d, n) <= 1024; ++n) {
      const auto p = phi(fam(d), n);
      REQUIRE(p.deg_z() == deg_D1(d, n));
      REQUIRE(monic_in_z(p));
    }
  // Larger cells through the c-specialized polynomial.
  const auto F = FiniteField::build(10007, 2);
  for (long d = 2; d <= 4; ++d)
    for (long n = 1; n <= 8; ++n) {
      if (ipow(d, n) > 70000) continue;
      REQUIRE(phi_at_c(F, d, n, F.from_int(5)).degree() == deg_D1(d, n));
    }
}

TEST_CASE("D1 and D0") {
  CHECK(deg_D1(2, 3) == 6);
  CHECK(deg_D0(2, 3) == 2);
  CHECK(deg_D1(2, 1) == 2);
  CHECK(deg_D0(2, 1) == 2);
  CHECK(deg_D1(2, 6) == 54);
  CHECK(deg_D0(2, 6) == 9);
  for (std::int64_t d = 2; d <= 7; ++d)
    for (std::int64_t n = 1; n <= 12; ++n) {
      REQUIRE(deg_D1(d, n) == brute_D1(d, n));
      REQUIRE(deg_D1(d, n) % n == 0);
    }
}

TEST_CASE("preperiodic dynatomic polynomials") {
  const auto p11 = phi_mn(fam(2), 1, 1);
  CHECK(p11 == zz() * zz() + zz() + cc());
  CHECK(phi_mn(fam(2), 2, 1).deg_z() == 4);
  CHECK(phi_mn(fam(3), 1, 1).deg_z() == 6);
  for (long d = 2; d <= 3; ++d)
    for (long m = 1; m <= 3; ++m)
      for (long n = 1; n <= 3; ++n) {
        const auto p = phi_mn(fam(d), m, n);
        REQUIRE(p.deg_z() == (d - 1) * ipow(d, m - 1).get_si() * deg_D1(d, n));
        REQUIRE(monic_in_z(p));
        // Phi_{m,n} * Phi_n(f^{m-1}) = Phi_n(f^m)
        const auto pn = phi(fam(d), n);
        REQUIRE(p * pn.compose_z(iterate(fam(d), m - 1)) == pn.compose_z(iterate(fam(d), m)));
      }
  CHECK_THROWS_AS(phi_mn(fam(2), 0, 1), DomainError);
}

TEST_CASE("zeta components") {
  const CyclotomicIntegers K2(2);
  const auto fp = make_family(2, K2);
  const auto c11 = zeta_component(fp, 1, 1, 1);
  CHECK(c11 == embed(K2, zz() * zz() + zz() + cc()));
  CHECK(c11 == embed(K2, phi_mn(fam(2), 1, 1)));
  const auto c21 = zeta_component(fp, 2, 1, 1);
  CHECK(c21.deg_z() == 4);
  const auto f = zz() * zz() + cc();
  CHECK(c21 == embed(K2, (-f).pow(2) - (-f) + cc()));
  CHECK_THROWS_AS(zeta_component(fp, 1, 1, 2), DomainError);
  CHECK_THROWS_AS(zeta_component(fp, 1, 1, 0), DomainError);

  const CyclotomicIntegers K3(3);
  const auto fp3 = make_family(3, K3);
  for (long j = 1; j <= 2; ++j)
    CHECK(zeta_component(fp3, 2, 2, j).deg_z() == 3 * deg_D1(3, 2));
}

TEST_CASE("zeta factorization") {
  CHECK(check_zeta_factorization(2, 2, 2).holds);
  CHECK(check_zeta_factorization(3, 1, 1).holds);
  CHECK(check_zeta_factorization(4, 1, 2).holds);
  CHECK(check_zeta_factorization_direct(3, 2, 1));
  CHECK(check_zeta_factorization_direct(4, 1, 2));
  ZetaCheckOptions forced;
  forced.direct_budget = 0;
  const auto r = check_zeta_factorization(3, 2, 2, forced);
  CHECK(r.holds);
  CHECK(r.route == "lifted");
  CHECK(check_zeta_factorization(2, 1, 3).route == "direct");
}

TEST_CASE("reduction commutes with construction") {
  for (long d = 2; d <= 3; ++d)
    for (long p : {3L, 5L, 7L}) {
      if (d % p == 0) continue;
      const auto F = FiniteField::build(p, d);
      for (long n = 1; n <= 5; ++n)
        REQUIRE(reduce(F, phi(fam(d), n)) == phi(make_family(d, F), n));
    }
}

TEST_CASE("curve labels") {
  CHECK(CurveLabel::periodic(3).str() == "Y1(3)");
  CHECK(CurveLabel::periodic(3).kind == CurveLabel::Kind::Y1);
  CHECK_FALSE(CurveLabel::periodic(3).zeta_index.has_value());
  const auto l = CurveLabel::preperiodic(2, 3, 1);
  CHECK(l.str() == "Y1(2,3,zeta^1)");
  CHECK(l.zeta_index == 1);
  CHECK_THROWS_AS(CurveLabel::preperiodic(0, 3, 1), DomainError);
}
