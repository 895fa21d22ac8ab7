#include <doctest.h>

#include <random>

#include "dynatomic/bivarpoly.hpp"
#include "dynatomic/finite_field.hpp"
#include "dynatomic/poly_text.hpp"
#include "dynatomic/rings.hpp"
#include "dynatomic/unipoly.hpp"

using namespace dynatomic;

namespace {

using ZB = BivarPoly<IntegerRing>;
using QU = UniPoly<RationalField>;
const IntegerRing Z;
const RationalField Q;

ZB parse(const std::string& text) { return parse_text(Z, text); }

ZB zz() { return ZB::z(Z); }
ZB cc() { return ZB::c(Z); }
ZB k(long a) { return ZB::constant(Z, a); }

QU qpoly(std::vector<long> c) {
  std::vector<mpq_class> v(c.begin(), c.end());
  return QU(Q, v);
}

ZB random_poly(std::mt19937_64& rng, long dz, long dc) {
  std::uniform_int_distribution<long> coef(-3, 3);
  std::vector<UniPoly<IntegerRing>> rows;
  for (long i = 0; i <= dz; ++i) {
    std::vector<mpz_class> r;
    for (long j = 0; j <= dc; ++j) r.emplace_back(coef(rng));
    rows.emplace_back(Z, r);
  }
  return ZB(Z, rows);
}

ZB random_monic(std::mt19937_64& rng, long dz, long dc) {
  ZB p = random_poly(rng, dz - 1, dc);
  return p + ZB::monomial(Z, 1, static_cast<std::size_t>(dz), 0);
}

}  // namespace

TEST_CASE("ring operations") {
  CHECK((zz() + cc()) * (zz() - cc()) == zz() * zz() - cc() * cc());
  const ZB P = zz() * zz() * cc() + k(3);
  CHECK(ZB(Z) + P == P);
  CHECK(P - P == ZB(Z));
  CHECK(-(-P) == P);
  CHECK(P.scaled(2) == P + P);
  const ZB phi1 = zz() * zz() - zz() + cc();
  const ZB phi2 = zz() * zz() + zz() + cc() + k(1);
  CHECK(phi1 * phi2 == parse("[1] z^4 c^0\n[2] z^2 c^1\n[-1] z^1 c^0\n[1] z^0 c^2\n[1] z^0 c^1\n"));
}

TEST_CASE("degrees are trimmed and additive") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 50; ++i) {
    const auto a = random_monic(rng, 3, 2), b = random_monic(rng, 2, 3);
    CHECK((a * b).deg_z() == a.deg_z() + b.deg_z());
  }
  const ZB P = zz() + cc();
  CHECK((P - zz()).deg_z() == 0);
  CHECK((P - zz()).deg_c() == 1);
}

TEST_CASE("exact division") {
  const ZB f2z = parse("[1] z^4 c^0\n[2] z^2 c^1\n[-1] z^1 c^0\n[1] z^0 c^2\n[1] z^0 c^1\n");
  const ZB phi1 = zz() * zz() - zz() + cc();
  CHECK(exact_div(f2z, phi1) == zz() * zz() + zz() + cc() + k(1));
  CHECK(exact_div(f2z, k(1)) == f2z);
  CHECK_THROWS_AS(exact_div(zz() * zz() + cc(), zz() + cc()), NonExactDivision);
  CHECK_FALSE(try_exact_div(zz() * zz() + cc(), zz() + cc()).has_value());
}

TEST_CASE("exact division with non-unit leading coefficient") {
  const ZB den = cc() * zz() + k(1);
  const ZB num = den * (zz() * cc() + k(2));
  CHECK(exact_div(num, den) == zz() * cc() + k(2));
  CHECK_FALSE(try_exact_div(num + k(1), den).has_value());
}

TEST_CASE("division round trip on random inputs") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 200; ++i) {
    const auto P = random_poly(rng, 3, 3);
    const auto D = random_monic(rng, 2, 2);
    REQUIRE(exact_div(P * D, D) == P);
  }
}

TEST_CASE("composition in z") {
  const ZB f = zz() * zz() + cc();
  CHECK(f.compose_z(f) == parse("[1] z^4 c^0\n[2] z^2 c^1\n[1] z^0 c^2\n[1] z^0 c^1\n"));
  CHECK(f.compose_z(zz()) == f);
  CHECK(zz().compose_z(f) == f);
  std::mt19937_64 rng(9);
  for (int i = 0; i < 20; ++i) {
    const auto P = random_poly(rng, 2, 1), G = random_poly(rng, 2, 1), H = random_poly(rng, 1, 2);
    REQUIRE(P.compose_z(G).compose_z(H) == P.compose_z(G.compose_z(H)));
    if (P.deg_z() > 0 && G.deg_z() > 0) REQUIRE(P.compose_z(G).deg_z() == P.deg_z() * G.deg_z());
  }
}

TEST_CASE("evaluation") {
  const ZB P = zz() * zz() - zz() + cc();
  const auto c = UniPoly<IntegerRing>::variable(Z);
  CHECK(P.eval_z(c) == c * c);
  CHECK(P.eval_z(UniPoly<IntegerRing>(Z)) == P.row(0));
  const ZB f = zz() * zz() + cc();
  const auto at0 = f.eval_c(0);
  CHECK(at0 == UniPoly<IntegerRing>::monomial(Z, 1, 2));
}

TEST_CASE("gcd over a field") {
  // c^2 + 2c and 2c + 2
  CHECK(gcd(qpoly({0, 2, 1}), qpoly({2, 2})) == qpoly({1}));
  const auto P = qpoly({3, 0, 6});
  CHECK(gcd(P, QU(Q)) == make_monic(P));
  CHECK(gcd(qpoly({0, 0, 1}), qpoly({0, 0, 0, 1})) == qpoly({0, 0, 1}));
}

TEST_CASE("gcd divides both inputs and absorbs common divisors") {
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<long> coef(-4, 4);
  auto rand_poly = [&](int deg) {
    std::vector<long> c;
    for (int i = 0; i < deg; ++i) c.push_back(coef(rng));
    c.push_back(1);
    return qpoly(c);
  };
  for (int i = 0; i < 100; ++i) {
    const auto common = rand_poly(1 + i % 2);
    const auto a = rand_poly(2) * common, b = rand_poly(2) * common;
    const auto g = gcd(a, b);
    REQUIRE(g.is_monic());
    REQUIRE(try_divide_exact(a, g).has_value());
    REQUIRE(try_divide_exact(b, g).has_value());
    REQUIRE(try_divide_exact(g, make_monic(common)).has_value());
  }
}

TEST_CASE("squarefree") {
  CHECK(is_squarefree(qpoly({0, 2, 1})));
  CHECK_FALSE(is_squarefree(qpoly({0, 0, 1})));
  CHECK(is_squarefree(qpoly({5})));
}

TEST_CASE("text format round trips") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 50; ++i) {
    const auto P = random_poly(rng, 4, 3);
    REQUIRE(parse_text(Z, to_text(P)) == P);
    REQUIRE(to_text(parse_text(Z, to_text(P))) == to_text(P));
  }
  const auto F = FiniteField::build(2, 3);
  const auto P = BivarPoly<FiniteField>::monomial(F, F.gen_zeta(), 2, 1) + BivarPoly<FiniteField>::constant(F, F.one());
  CHECK(to_text(P) == "[0,1] z^2 c^1\n[1,0] z^0 c^0\n");
  CHECK(parse_text(F, to_text(P)) == P);
}

TEST_CASE("text format rejects malformed input") {
  CHECK_THROWS(parse("[0] z^1 c^0\n"));
  CHECK_THROWS(parse("[1] z^1 c^0\n[2] z^1 c^0\n"));
  CHECK_THROWS(parse("[1] z^01 c^0\n"));
  CHECK_THROWS(parse("1 z^1 c^0\n"));
  CHECK(parse("") == ZB(Z));
}

TEST_CASE("pretty printing") {
  CHECK(to_pretty(zz() * zz() + zz() + cc() + k(1)) == "z^2 + z + c + 1");
  CHECK(to_pretty(zz() * zz() - zz() + cc()) == "z^2 - z + c");
  CHECK(to_pretty(ZB(Z)) == "0");
  CHECK(to_pretty(k(-2) * zz() * cc()) == "-2*z*c");
}

TEST_CASE("mismatched contexts are rejected") {
  const auto F3 = FiniteField::build(3, 2), F5 = FiniteField::build(5, 2);
  const auto a = BivarPoly<FiniteField>::z(F3), b = BivarPoly<FiniteField>::z(F5);
  CHECK_THROWS_AS(a + b, ContextMismatch);
  CHECK_THROWS_AS(a * b, ContextMismatch);
}

TEST_CASE("degree cap") {
  const ZB f = zz() * zz() + cc();
  CHECK_THROWS_AS(f.pow(20, 30), CapExceeded);
  CHECK(f.pow(20, 40).deg_z() == 40);
}
