#include <doctest.h>

#include <set>

#include "dynatomic/dynatomic.hpp"
#include "dynatomic/factor.hpp"
#include "dynatomic/poly_text.hpp"

using namespace dynatomic;

namespace {

FqPoly target(const FiniteField& F, long d, long n, long m) {
  const auto fam = make_family(d, F);
  return iterate(fam, n) - iterate(fam, m);
}

FqPoly product(const FiniteField& F, const std::vector<FqPoly>& fs) {
  FqPoly acc = FqPoly::constant(F, F.one());
  for (const auto& f : fs) acc = acc * f;
  return acc;
}

}  // namespace

TEST_CASE("local orbits") {
  const auto F = FiniteField::build(3, 2);
  const auto a = local_orbits(F, 2, 1, 0);
  REQUIRE(a.orbits.size() == 1);
  CHECK(a.orbits[0].size() == 2);
  const auto b = local_orbits(F, 2, 2, 0);
  CHECK(b.orbits.size() == 2);
  for (auto [p, d, n, m] : {std::tuple{3L, 2L, 3L, 1L}, std::tuple{2L, 3L, 2L, 0L}, std::tuple{7L, 3L, 2L, 1L}}) {
    const auto G = FiniteField::build(p, d);
    const auto part = local_orbits(G, d, n, m);
    REQUIRE(part.orbits.size() == static_cast<std::size_t>(ipow(d, n - 1).get_si()));
    std::set<std::size_t> seen;
    for (const auto& o : part.orbits) {
      REQUIRE(o.size() == static_cast<std::size_t>(d));
      seen.insert(o.begin(), o.end());
    }
    CHECK(seen.size() == part.codes.size());
  }
}

TEST_CASE("subset factorization examples") {
  const auto F = FiniteField::build(3, 2);
  const auto phi1 = parse_text(F, "[1] z^2 c^0\n[2] z^1 c^0\n[1] z^0 c^1\n");
  const auto phi2 = parse_text(F, "[1] z^2 c^0\n[1] z^1 c^0\n[1] z^0 c^1\n[1] z^0 c^0\n");
  const auto a = subset_factor(F, 2, 1, 0);
  REQUIRE(a.factors.size() == 1);
  CHECK(a.factors[0] == phi1);
  const auto b = subset_factor(F, 2, 2, 0);
  REQUIRE(b.factors.size() == 2);
  auto got = b.factors;
  canonical_order(got);
  std::vector<FqPoly> want{phi1, phi2};
  canonical_order(want);
  CHECK(got == want);
}

TEST_CASE("subset factorization invariants") {
  for (auto [p, d, n, m] : {std::tuple{3L, 2L, 3L, 0L}, std::tuple{5L, 2L, 3L, 1L}, std::tuple{2L, 3L, 2L, 1L},
                            std::tuple{7L, 3L, 2L, 0L}}) {
    const auto F = FiniteField::build(p, d);
    const auto r = subset_factor(F, d, n, m);
    REQUIRE(r.ok());
    CHECK(product(F, r.factors) == target(F, d, n, m));
    long total = 0, points = 0;
    for (const auto& f : r.factors) {
      CHECK(gauss_bound_ok(f, d));
      total += f.deg_z();
      points += points_above_infinity(f.deg_z(), d);
    }
    CHECK(total == ipow(d, n).get_si());
    CHECK(points == ipow(d, n - 1).get_si());
    CHECK(r.degrees.size() == r.factors.size());
  }
}

TEST_CASE("orbit cap") {
  SubsetOptions opt;
  opt.max_orbits = 2;
  CHECK_THROWS_AS(subset_factor(FiniteField::build(3, 2), 2, 3, 0, opt), CapExceeded);
}

TEST_CASE("gauss bound") {
  const auto F = FiniteField::build(3, 2);
  CHECK(gauss_bound_ok(parse_text(F, "[1] z^2 c^0\n[2] z^1 c^0\n[1] z^0 c^1\n"), 2));
  // q_1 = c violates deg q_1 <= 0
  CHECK_FALSE(gauss_bound_ok(parse_text(F, "[1] z^2 c^0\n[1] z^1 c^1\n[1] z^0 c^0\n"), 2));
}

TEST_CASE("bounded degree scan") {
  const auto F = FiniteField::build(3, 2);
  const auto two = bounded_degree_scan(F, 2, 2, 1, 0);
  CHECK(two.candidates == 27);
  REQUIRE(two.divisors.size() == 1);
  CHECK(two.divisors[0] == parse_text(F, "[1] z^2 c^0\n[2] z^1 c^0\n[1] z^0 c^1\n"));
  for (long n = 1; n <= 3; ++n)
    for (long m = 0; m < n && m <= 1; ++m) CHECK(bounded_degree_scan(F, 2, 1, n, m).divisors.empty());
  CHECK_THROWS_AS(bounded_degree_scan(F, 2, 4, 3, 0, 100), CapExceeded);
}

TEST_CASE("scan results are among the subset factors") {
  for (long p : {3L, 5L}) {
    const auto F = FiniteField::build(p, 2);
    for (long n = 1; n <= 3; ++n)
      for (long m = 0; m < n && m <= 1; ++m) {
        auto mine = subset_factor(F, 2, n, m).factors;
        canonical_order(mine);
        REQUIRE(mine == reduction_factorization(F, 2, n, m));
        for (long e = 1; e <= 2; ++e) {
          auto scan = bounded_degree_scan(F, 2, e, n, m).divisors;
          canonical_order(scan);
          std::vector<FqPoly> restricted;
          for (const auto& f : mine)
            if (f.deg_z() == e) restricted.push_back(f);
          REQUIRE(scan == restricted);
        }
      }
  }
}

TEST_CASE("points above infinity and the gonality bound") {
  CHECK(points_above_infinity(2, 2) == 1);
  CHECK(points_above_infinity(54, 2) == 27);
  CHECK_THROWS_AS(points_above_infinity(3, 2), DomainError);
  CHECK(ogg_gonality_bound(54, 2, 3) == 7);
  CHECK(ogg_gonality_bound(2, 2, 3) == 1);
  CHECK(ogg_gonality_bound(96, 2, 3) == 12);
  CHECK_THROWS_AS(ogg_gonality_bound(3, 2, 3), DomainError);
  for (std::int64_t e = 2; e <= 400; e += 2)
    for (std::int64_t q : {3, 5, 7, 9}) {
      const auto g = ogg_gonality_bound(e, 2, q);
      REQUIRE(g * 2 * (q + 1) >= e);
      REQUIRE((g - 1) * 2 * (q + 1) < e);
    }
}
