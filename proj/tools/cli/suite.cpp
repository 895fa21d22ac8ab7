#include "suite.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "dynatomic/bounds.hpp"
#include "dynatomic/dynatomic.hpp"
#include "dynatomic/factor.hpp"
#include "dynatomic/lemmas.hpp"
#include "dynatomic/parallel.hpp"
#include "dynatomic/poly_text.hpp"
#include "dynatomic/series.hpp"

namespace dynatomic::cli {
namespace {

CheckResult pass_if(bool ok, std::string detail = {}) {
  return {ok ? Outcome::Pass : Outcome::Fail, std::move(detail)};
}

std::string kv(std::initializer_list<std::pair<const char*, long>> items) {
  std::string out;
  for (const auto& [k, v] : items) {
    if (!out.empty()) out += ' ';
    out += std::string(k) + "=" + std::to_string(v);
  }
  return out;
}

void add(std::vector<Check>& out, std::string family, std::string params, std::function<CheckResult()> run) {
  out.push_back({std::move(family), std::move(params), std::move(run)});
}

FiniteField field(long p, long d) { return FiniteField::build(p, d); }

std::vector<long> range(long lo, long hi) {
  std::vector<long> v;
  for (long i = lo; i <= hi; ++i) v.push_back(i);
  return v;
}

FqPoly parse_fq(const FiniteField& F, const std::string& text) { return parse_text(F, text); }

}  // namespace

Grid quick_grid() { return {{2, 3}, 4, 3, {3, 5}, false}; }
Grid full_grid() { return {{2, 3, 4}, 6, 3, {3, 5, 7}, true}; }

std::vector<Check> build_suite(const Grid& g, const Settings& s) {
  std::vector<Check> out;
  const long max_deg_z = s.max_deg_z;

  // Phi_e multiply out to f^n - z.
  for (long d : g.ds)
    for (long n : range(1, g.n_max))
      add(out, "product", kv({{"d", d}, {"n", n}}), [=] {
        return pass_if(check_product_identity(make_family(d, IntegerRing{}, max_deg_z), n));
      });

  // deg_z Phi_n = D1(n); bivariate for small cells, c-specialized beyond.
  for (long d : g.ds) {
    if (g.full && d > 3) continue;
    for (long n : range(1, g.full ? 8 : g.n_max))
      add(out, "degree", kv({{"d", d}, {"n", n}}), [=] {
        const auto D1 = deg_D1(d, n);
        long deg;
        if (checked_pow(d, static_cast<std::uint64_t>(n)) <= 1024) {
          deg = phi(make_family(d, IntegerRing{}, max_deg_z), n).deg_z();
        } else {
          const auto F = FiniteField::build(10007, 2);
          deg = phi_at_c(F, d, n, F.from_int(3)).degree();
        }
        return pass_if(deg == D1 && D1 % n == 0, "deg " + std::to_string(deg) + ", D1 " + std::to_string(D1));
      });
  }
  add(out, "degree", "d=2 D1(6)=54 D0(6)=9", [] { return pass_if(deg_D1(2, 6) == 54 && deg_D0(2, 6) == 9); });

  // zeta-factorization of Phi_{m,n}.
  for (long d : g.ds)
    for (long m : range(1, g.m_max))
      for (long n : range(1, std::min<long>(g.n_max, 4))) {
        add(out, "zeta", kv({{"d", d}, {"m", m}, {"n", n}}), [=] {
          ZetaCheckOptions opt;
          opt.direct_budget = s.direct_budget;
          opt.max_deg_z = max_deg_z;
          const auto r = check_zeta_factorization(d, m, n, opt);
          return pass_if(r.holds, "route " + r.route);
        });
      }

  // Simple roots on the fibre z = 0.
  {
    std::set<std::tuple<long, long, long>> cells;
    for (long d : g.ds) {
      if (d > 3) continue;
      for (long m : range(2, g.m_max))
        for (long n : range(1, g.n_max)) cells.insert({d, m, n});
      if (g.full)
        for (long m : range(2, 4))
          for (long n : range(1, 3)) cells.insert({d, m, n});
    }
    for (const auto& [d, m, n] : cells)
      for (long j = 1; j < d; ++j)
        add(out, "simple-roots", kv({{"d", d}, {"m", m}, {"n", n}, {"j", j}}), [=] {
          const auto r = verify_simple_roots(d, m, n, j);
          return pass_if(r.ok(), "degree " + std::to_string(r.degree) + ", " + r.method);
        });
    add(out, "simple-roots", "d=2 m=2 n=1 instance", [] {
      const auto P = zero_fiber_poly(2, 2, 1, 1);
      const CyclotomicField& K = P.ring();
      const auto expected = CycPoly(K, {K.zero(), K.from_scalar(mpq_class(2)), K.one()});
      return pass_if(P == expected && is_squarefree(P), "c^2 + 2c");
    });
  }

  // The z = 0 factorization for n | m - 1.
  for (long d : g.ds) {
    if (d > 3) continue;
    for (long m : range(2, g.m_max))
      for (long n : range(1, g.n_max))
        if ((m - 1) % n == 0)
          add(out, "fiber-factorization", kv({{"d", d}, {"m", m}, {"n", n}}),
              [=] { return pass_if(verify_factorization2(d, m, n).holds); });
  }

  // Complete splitting at c = infinity.
  for (long d : g.ds)
    for (long p : g.ps) {
      if (d % p == 0 || d > 3) continue;
      for (long n : range(1, g.n_max))
        for (long m = 0; m < n && m <= g.m_max; ++m) {
          add(out, "splitting", kv({{"d", d}, {"p", p}, {"n", n}, {"m", m}}), [=] {
            const auto r = verify_splitting(field(p, d), d, n, m, s.prec, s.max_escalations);
            return pass_if(r.ok(), "min residual order " + std::to_string(r.min_residual_order));
          });
        }
    }
  // The F_4 cases, with q = 4 > p.
  for (long n : range(1, 3))
    for (long m = 0; m <= 1 && m < n; ++m)
      add(out, "splitting", kv({{"d", 3}, {"p", 2}, {"n", n}, {"m", m}}), [=] {
        const auto r = verify_splitting(field(2, 3), 3, n, m, s.prec, s.max_escalations);
        return pass_if(r.ok() && r.q == 4);
      });

  // Bounded-degree scan at d = 2, q = 3.
  add(out, "scan", "d=2 p=3 e<=2 (n,m) in {(1,0),(2,0)}", [=] {
    const auto F = field(3, 2);
    const auto phi1 = parse_fq(F, "[1] z^2 c^0\n[2] z^1 c^0\n[1] z^0 c^1\n");
    const auto phi2 = parse_fq(F, "[1] z^2 c^0\n[1] z^1 c^0\n[1] z^0 c^1\n[1] z^0 c^0\n");
    bool ok = true;
    for (long n : {1L, 2L}) {
      ok = ok && bounded_degree_scan(F, 2, 1, n, 0, s.scan_cap).divisors.empty();
      const auto two = bounded_degree_scan(F, 2, 2, n, 0, s.scan_cap);
      const std::vector<FqPoly> expected = n == 1 ? std::vector<FqPoly>{phi1} : std::vector<FqPoly>{phi2, phi1};
      auto got = two.divisors;
      auto want = expected;
      canonical_order(got);
      canonical_order(want);
      ok = ok && got == want;
    }
    return pass_if(ok);
  });

  // Subset factorization against scan and the characteristic-0 oracle.
  for (long p : g.ps) {
    if (p == 2) continue;
    for (long n : range(1, 3))
      for (long m = 0; m <= 1 && m < n; ++m)
        add(out, "oracle", kv({{"d", 2}, {"p", p}, {"n", n}, {"m", m}}), [=] {
          const auto F = field(p, 2);
          SubsetOptions opt{s.prec, s.max_orbits, s.candidate_cap, s.max_escalations};
          const auto rep = subset_factor(F, 2, n, m, opt);
          auto mine = rep.factors;
          canonical_order(mine);
          const auto oracle = reduction_factorization(F, 2, n, m, s.scan_cap);
          bool ok = rep.ok() && mine == oracle;
          for (long e = 1; e <= 2 && ok; ++e) {
            auto scan = bounded_degree_scan(F, 2, e, n, m, s.scan_cap).divisors;
            std::vector<FqPoly> restricted;
            for (const auto& f : mine)
              if (f.deg_z() == e) restricted.push_back(f);
            canonical_order(scan);
            ok = scan == restricted;
          }
          std::int64_t points = 0;
          for (auto e : rep.degrees) points += points_above_infinity(e, 2);
          ok = ok && points == checked_pow(2, static_cast<std::uint64_t>(n - 1));
          return pass_if(ok, std::to_string(rep.factors.size()) + " factors");
        });
  }

  add(out, "ogg", "points(54,2)=27 ogg(54,2,3)=7", [] {
    return pass_if(points_above_infinity(54, 2) == 27 && ogg_gonality_bound(54, 2, 3) == 7 &&
                   ogg_gonality_bound(96, 2, 3) == 12 && ogg_gonality_bound(2, 2, 3) == 1);
  });

  // Bound calculators.
  add(out, "bounds", "castelnuovo-severi symmetry", [] {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> gd(0, 1000), dd(1, 100);
    for (int i = 0; i < 100; ++i) {
      const mpz_class g1 = gd(rng), g2 = gd(rng), d1 = dd(rng), d2 = dd(rng);
      if (castelnuovo_severi(g1, g2, d1, d2) != castelnuovo_severi(g2, g1, d2, d1)) return pass_if(false);
    }
    return pass_if(castelnuovo_severi(0, 0, 2, 3) == 2 && castelnuovo_severi(0, 1, 2, 2) == 3);
  });
  for (long d : g.ds) {
    if (d > 3) continue;
    for (long n : range(1, g.full ? 6 : g.n_max))
      add(out, "count", kv({{"d", d}, {"n", n}}), [=] {
        long total = 0;
        const auto f = detail::integer_iterates(d, n);
        for (long m = 0; m < n; ++m) total += (f[static_cast<std::size_t>(n)] - f[static_cast<std::size_t>(m)]).deg_z();
        return pass_if(preperiodic_count_bound(d, n) == total);
      });
  }

  // Reduction of Phi_n over Q equals Phi_n over F_q.
  for (long d : g.ds) {
    if (d > 3) continue;
    for (long p : g.ps) {
      if (d % p == 0) continue;
      for (long n : range(1, g.full ? 5 : g.n_max))
        add(out, "reduction", kv({{"d", d}, {"p", p}, {"n", n}}), [=] {
          const auto F = field(p, d);
          return pass_if(reduce(F, phi(make_family(d, IntegerRing{}, max_deg_z), n)) ==
                         phi(make_family(d, F, max_deg_z), n));
        });
    }
  }
  return out;
}

std::vector<SuiteResult> run_suite(const std::vector<Check>& checks, unsigned threads) {
  return parallel_map(checks.size(), threads, [&](std::size_t i) {
    SuiteResult r{checks[i].family, checks[i].params, {}};
    try {
      r.result = checks[i].run();
    } catch (const CapExceeded& e) {
      r.result = {Outcome::Exhausted, e.what()};
    } catch (const PrecisionInsufficient& e) {
      r.result = {Outcome::Exhausted, e.what()};
    } catch (const std::exception& e) {
      r.result = {Outcome::Fail, e.what()};
    }
    return r;
  });
}

}  // namespace dynatomic::cli
