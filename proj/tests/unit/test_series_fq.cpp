#include <doctest.h>

#include <map>
#include <random>

#include "dynatomic/dynatomic.hpp"
#include "dynatomic/series.hpp"

using namespace dynatomic;

namespace {

using Elem = FiniteField::Elem;

TSeries poly(const FiniteField& F, long lo, std::vector<long> c, long prec = TSeries::kExact) {
  std::vector<Elem> v;
  for (long x : c) v.push_back(F.from_int(x));
  return TSeries(F, lo, v, prec);
}

TSeries random_series(const FiniteField& F, std::mt19937_64& rng, long lo, long prec) {
  std::uniform_int_distribution<std::uint32_t> pick(0, static_cast<std::uint32_t>(F.q() - 1));
  std::vector<Elem> v;
  for (long e = lo; e < prec; ++e) v.push_back(Elem{pick(rng)});
  return TSeries(F, lo, v, prec);
}

// Position of the first differing symbol among s_1 .. s_limit.
long first_difference(const BranchCode& a, const BranchCode& b, long limit) {
  for (long i = 1; i <= limit; ++i)
    if (a.at(i) != b.at(i)) return i;
  return 0;
}

}  // namespace

TEST_CASE("series arithmetic") {
  const auto F = FiniteField::build(3, 2);
  CHECK(poly(F, 0, {1, 1}) * poly(F, 0, {1, 2}) == poly(F, 0, {1, 0, 2}));
  const auto inv = poly(F, 0, {1, 1}).inverse(10);
  CHECK(inv.prec() == 10);
  for (long e = 0; e < 10; ++e) CHECK(F.equal(inv.coeff(e), F.from_int(e % 2 ? -1 : 1)));
  CHECK((inv * poly(F, 0, {1, 1})).truncated(10) == TSeries::one(F).truncated(10));
  const auto two = poly(F, -1, {1}) + poly(F, -1, {1});
  CHECK(F.equal(two.coeff(-1), F.from_int(2)));
  CHECK_THROWS_AS(two.truncated(3).coeff(3), PrecisionInsufficient);
}

TEST_CASE("precision tracking") {
  const auto F = FiniteField::build(5, 2);
  const auto a = poly(F, -2, {1, 3}, 4), b = poly(F, 1, {2}, 6);
  // min(pa + ob, pb + oa)
  CHECK((a * b).prec() == 4);
  CHECK((a + b).prec() == 4);
  // inverse of order -2 known to 4 is known to 4 - 2 * (-2)... relative to its order
  const auto ai = a.inverse();
  CHECK(ai.order() == 2);
  CHECK(ai.prec() == 8);
  CHECK(TSeries::agree((ai * a).truncated(6), TSeries::one(F), 6));
  CHECK_THROWS_AS(TSeries(F, 5).inverse(), PrecisionInsufficient);
}

TEST_CASE("d-th roots by coefficient recursion") {
  const auto F = FiniteField::build(3, 2);
  CHECK(dth_root_unit(TSeries::one(F), 2, F.one()) == TSeries::one(F));
  const auto u = poly(F, 0, {1, 0, 1});
  const auto g = dth_root_unit(u, 2, F.one(), 20);
  CHECK(F.equal(g.coeff(0), F.one()));
  CHECK(F.equal(g.coeff(2), F.from_int(2)));
  CHECK(TSeries::agree(g * g, u, 20));
  CHECK_THROWS_AS(dth_root_unit(poly(F, 0, {-1, 1}), 2, 20), DomainError);
  CHECK_THROWS_AS(dth_root_unit(poly(F, 1, {1}), 2, 20), DomainError);
}

TEST_CASE("d-th roots of random unit series") {
  std::mt19937_64 rng(21);
  for (auto [p, d] : {std::pair{3, 2}, std::pair{2, 3}, std::pair{5, 4}, std::pair{7, 3}}) {
    const auto F = FiniteField::build(p, d);
    for (int i = 0; i < 20; ++i) {
      auto u = random_series(F, rng, 1, 15) + TSeries::one(F);
      const auto g = dth_root_unit(u, d, F.one());
      REQUIRE(TSeries::agree(g.pow(static_cast<unsigned>(d)), u, 15));
    }
  }
}

TEST_CASE("inverse branches") {
  std::mt19937_64 rng(23);
  for (auto [p, d] : {std::pair{3, 2}, std::pair{5, 2}, std::pair{2, 3}, std::pair{7, 3}, std::pair{5, 4}}) {
    const auto F = FiniteField::build(p, d);
    const auto zeta = zeta_d_power(F, d, 1);
    for (int s = 0; s < d; ++s) {
      const auto at0 = branch_apply(F, d, s, TSeries(F, TSeries::kExact), 20);
      CHECK(at0.order() == -1);
      CHECK(F.equal(at0.leading(), F.pow(zeta, s)));
    }
    for (int i = 0; i < 100; ++i) {
      const auto z = random_series(F, rng, -d + 1, 20);
      const int s = i % d;
      const auto w = branch_apply(F, d, s, z);
      REQUIRE(w.order() == -1);
      REQUIRE(TSeries::agree(forward_map(F, d, w), z, 20));
    }
    CHECK_THROWS_AS(branch_apply(F, d, 0, poly(F, -d, {1})), DomainError);
  }
}

TEST_CASE("branch codes") {
  const BranchCode code(1, 2, {0, 1, 0});
  CHECK(code.str() == "0(10)");
  CHECK(code.at(1) == 0);
  CHECK(code.at(2) == 1);
  CHECK(code.at(3) == 0);
  CHECK(code.at(4) == 1);
  CHECK_THROWS_AS(BranchCode(0, 1, {0, 1}), DomainError);
  const auto codes = BranchCode::for_preperiodic(2, 3, 1);
  CHECK(codes.size() == 8);
  for (std::size_t i = 0; i + 1 < codes.size(); ++i) CHECK(codes[i].symbols < codes[i + 1].symbols);
  for (const auto& c : codes)
    for (long i = 1; i <= 6; ++i) CHECK(c.at(i + 3) == c.at(i + 1));
  CHECK_THROWS_AS(BranchCode::for_preperiodic(2, 2, 2), DomainError);
}

TEST_CASE("coded roots") {
  const auto F = FiniteField::build(3, 2);
  const long prec = 12;
  const auto r0 = coded_root(F, 2, BranchCode(0, 1, {0}), prec);
  const auto r1 = coded_root(F, 2, BranchCode(0, 1, {1}), prec);
  CHECK(r0.order() == -1);
  CHECK(r0.prec() == prec);
  CHECK(F.equal(r0.leading(), F.one()));
  CHECK(F.equal(r1.leading(), F.from_int(2)));
  CHECK((r0 - r1).order() == -1);
  const auto c = c_series(F, 2);
  for (const auto& r : {r0, r1}) {
    const auto residual = r * r - r + c;
    CHECK(residual.order() >= prec - 2);
  }
}

TEST_CASE("coded roots only depend on the symbol sequence") {
  const auto F = FiniteField::build(5, 2);
  for (int s = 0; s < 2; ++s) {
    const auto a = coded_root(F, 2, BranchCode(0, 1, {s}), 16);
    const auto b = coded_root(F, 2, BranchCode(0, 2, {s, s}), 16);
    const auto c = coded_root(F, 2, BranchCode(1, 1, {s, s}), 16);
    CHECK(TSeries::agree(a, b, 14));
    CHECK(TSeries::agree(a, c, 14));
  }
}

TEST_CASE("distinct codes separate at the disk depth") {
  for (auto [p, d] : {std::pair{3, 2}, std::pair{2, 3}}) {
    const auto F = FiniteField::build(p, d);
    const long n = 3, m = 1, prec = 24;
    const auto codes = BranchCode::for_preperiodic(d, n, m);
    std::vector<TSeries> roots;
    for (const auto& c : codes) roots.push_back(coded_root(F, d, c, prec));
    for (std::size_t a = 0; a < codes.size(); ++a)
      for (std::size_t b = a + 1; b < codes.size(); ++b) {
        const long i = first_difference(codes[a], codes[b], 2 * n);
        REQUIRE(i > 0);
        REQUIRE((roots[a] - roots[b]).order() <= -1 + (i - 1) * (d - 1));
      }
  }
}

TEST_CASE("complete splitting") {
  SUBCASE("d = 2, q = 3, n = 1") {
    const auto r = verify_splitting(FiniteField::build(3, 2), 2, 1, 0, 12);
    CHECK(r.ok());
    CHECK(r.count == 2);
  }
  SUBCASE("d = 2, q = 3, n = 2") {
    const auto r = verify_splitting(FiniteField::build(3, 2), 2, 2, 0, 16);
    CHECK(r.ok());
    CHECK(r.count == 4);
    CHECK(r.distinct_ok);
  }
  SUBCASE("d = 3, q = 4") {
    const auto F = FiniteField::build(2, 3);
    const auto r = verify_splitting(F, 3, 1, 0, 12);
    CHECK(r.ok());
    CHECK(r.q == 4);
    std::vector<Elem> lead;
    for (const auto& root : r.roots) lead.push_back(root.series.leading());
    for (const auto& x : lead) CHECK(F.is_one(F.pow(x, 3)));
    CHECK_FALSE(F.equal(lead[0], lead[1]));
    CHECK_FALSE(F.equal(lead[0], lead[2]));
    CHECK_FALSE(F.equal(lead[1], lead[2]));
  }
  SUBCASE("leading coefficients are the roots of unity with equal multiplicity") {
    const auto F = FiniteField::build(7, 3);
    const auto r = verify_splitting(F, 3, 3, 1);
    REQUIRE(r.ok());
    std::map<std::uint32_t, long> counts;
    for (const auto& root : r.roots) ++counts[root.series.leading().v];
    CHECK(counts.size() == 3);
    for (const auto& [k, v] : counts) CHECK(v == 9);
  }
  CHECK_THROWS_AS(verify_splitting(FiniteField::build(3, 2), 2, 1, 1), DomainError);
}

TEST_CASE("coefficient series map c to -T^-d") {
  const auto F = FiniteField::build(5, 2);
  const auto fam = make_family(2, F);
  const auto P = phi(fam, 1);
  const auto cs = coefficient_series(P, 2);
  REQUIRE(cs.size() == 3);
  CHECK(cs[0] == poly(F, -2, {-1}));
  CHECK(cs[1] == poly(F, 0, {-1}));
  CHECK(cs[2] == TSeries::one(F));
}
