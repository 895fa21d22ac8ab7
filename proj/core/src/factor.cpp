#include "dynatomic/factor.hpp"

#include <algorithm>
#include <optional>

#include "dynatomic/dynatomic.hpp"
#include "dynatomic/poly_text.hpp"

namespace dynatomic {
namespace {

FqPoly difference(const FiniteField& F, long d, long n, long m) {
  if (m < 0 || n <= m) throw DomainError("f^n - f^m needs n > m >= 0");
  const auto f = detail::iterates(make_family(d, F), n);
  return f[static_cast<std::size_t>(n)] - f[static_cast<std::size_t>(m)];
}

// Divides by the leading z-coefficient, which must be a nonzero constant.
FqPoly monic_in_z(const FqPoly& P) {
  const auto& F = P.ring();
  const auto& top = P.rows().back();
  if (top.degree() != 0) throw DomainError("leading z-coefficient is not constant in c");
  return P.scaled(F.inv(top.coeffs()[0]));
}

// The monic polynomial in z whose roots are the given series, if every
// coefficient is visibly a polynomial in c obeying the Gauss bound.
std::optional<FqPoly> round_union(const FiniteField& F, long d, const std::vector<const TSeries*>& roots) {
  const auto cf = monic_from_roots(F, roots);
  const long e = static_cast<long>(roots.size());
  std::vector<UniPoly<FiniteField>> rows(static_cast<std::size_t>(e + 1), UniPoly<FiniteField>(F));
  rows[static_cast<std::size_t>(e)] = UniPoly<FiniteField>::constant(F, F.one());
  for (long r = 1; r <= e; ++r) {
    const TSeries& s = cf[static_cast<std::size_t>(e - r)];
    if (s.prec() < 1) throw PrecisionInsufficient("symmetric function known only below T^" + std::to_string(s.prec()));
    const long jmax = r / d;
    std::vector<FiniteField::Elem> c(static_cast<std::size_t>(jmax + 1), F.zero());
    for (std::size_t i = 0; i < s.coeffs().size(); ++i) {
      const long x = s.order() + static_cast<long>(i);
      if (F.is_zero(s.coeffs()[i])) continue;
      if (x > 0 || x % d != 0 || -x / d > jmax) return std::nullopt;
      const long j = -x / d;
      c[static_cast<std::size_t>(j)] = j % 2 == 0 ? s.coeffs()[i] : F.neg(s.coeffs()[i]);
    }
    rows[static_cast<std::size_t>(e - r)] = UniPoly<FiniteField>(F, std::move(c));
  }
  return FqPoly(F, std::move(rows));
}

// Unions of k orbits from remaining, in lexicographic order; calls visit
// until it returns true.
template <class Visit>
bool for_each_union(const std::vector<std::size_t>& remaining, std::size_t k, Visit&& visit) {
  if (k > remaining.size()) return false;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    std::vector<std::size_t> pick(k);
    for (std::size_t i = 0; i < k; ++i) pick[i] = remaining[idx[i]];
    if (visit(pick)) return true;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == remaining.size() - k + (i - 1)) --i;
    if (i == 0) return false;
    ++idx[i - 1];
    for (std::size_t t = i; t < k; ++t) idx[t] = idx[t - 1] + 1;
  }
}

std::int64_t checked_count(std::int64_t q, std::int64_t slots, std::int64_t cap) {
  std::int64_t count = 1;
  for (std::int64_t i = 0; i < slots; ++i) {
    if (count > cap / q) return -1;
    count *= q;
  }
  return count;
}

// Remainder-free test of monic Q | G in F_q[z].
bool divides_univariate(const FiniteField& F, const std::vector<FiniteField::Elem>& G,
                        const std::vector<FiniteField::Elem>& Q) {
  if (G.empty()) return true;
  const std::size_t e = Q.size() - 1;
  if (G.size() - 1 < e) return false;
  std::vector<FiniteField::Elem> rem(G);
  for (std::size_t i = rem.size(); i-- > e;) {
    const auto t = rem[i];
    if (F.is_zero(t)) continue;
    for (std::size_t k = 0; k <= e; ++k) F.submul(rem[i - e + k], t, Q[k]);
  }
  for (std::size_t i = 0; i < e; ++i)
    if (!F.is_zero(rem[i])) return false;
  return true;
}

std::vector<FqPoly> split_by_scan(const FqPoly& G, long d, std::int64_t cap) {
  const long deg = G.deg_z();
  for (long t = 1; 2 * t <= deg; ++t) {
    auto scan = scan_divisors(G, d, t, cap);
    if (scan.divisors.empty()) continue;
    const FqPoly& Q = scan.divisors.front();
    std::vector<FqPoly> out{Q};
    auto rest = split_by_scan(exact_div(G, Q), d, cap);
    out.insert(out.end(), rest.begin(), rest.end());
    return out;
  }
  return {G};
}

}  // namespace

OrbitPartition local_orbits(const FiniteField& F, long d, long n, long m, long prec) {
  OrbitPartition out;
  out.codes = BranchCode::for_preperiodic(d, n, m);
  const long N = static_cast<long>(out.codes.size());
  out.root_prec = prec + N + n * (d - 1);
  for (const auto& code : out.codes) out.roots.push_back(coded_root(F, d, code, out.root_prec));

  const auto zeta = zeta_d_power(F, d, 1);
  std::vector<std::size_t> image(out.roots.size());
  for (std::size_t i = 0; i < out.roots.size(); ++i) {
    const TSeries moved = out.roots[i].substitute_scale(zeta);
    std::size_t hits = 0;
    for (std::size_t j = 0; j < out.roots.size(); ++j)
      if ((out.roots[j] - moved).is_zero()) {
        image[i] = j;
        ++hits;
      }
    if (hits != 1)
      throw PrecisionInsufficient("image of root " + out.codes[i].str() + " under T -> zeta T matched " +
                                  std::to_string(hits) + " roots");
  }
  std::vector<bool> seen(out.roots.size(), false);
  for (std::size_t i = 0; i < out.roots.size(); ++i) {
    if (seen[i]) continue;
    std::vector<std::size_t> orbit;
    for (std::size_t j = i; !seen[j]; j = image[j]) {
      seen[j] = true;
      orbit.push_back(j);
    }
    out.orbits.push_back(std::move(orbit));
  }
  return out;
}

bool gauss_bound_ok(const FqPoly& Q, long d) {
  const long e = Q.deg_z();
  for (long i = 0; i <= e; ++i) {
    const auto& row = Q.rows()[static_cast<std::size_t>(i)];
    if (row.coeffs().empty()) continue;
    if (row.degree() > (e - i) / d) return false;
  }
  return true;
}

FactorReport subset_factor(const FiniteField& F, long d, long n, long m, const SubsetOptions& opt) {
  const FqPoly target = difference(F, d, n, m);
  if (checked_pow(d, static_cast<std::uint64_t>(n - 1)) > opt.max_orbits)
    throw CapExceeded(std::to_string(d) + "^" + std::to_string(n - 1) + " local orbits exceed the cap of " +
                      std::to_string(opt.max_orbits));

  FactorReport rep;
  rep.d = d;
  rep.p = F.p();
  rep.q = F.q();
  rep.n = n;
  rep.m = m;
  rep.prec = opt.prec;

  for (int attempt = 0; attempt <= opt.max_escalations; ++attempt) {
    try {
      const OrbitPartition part = local_orbits(F, d, n, m, opt.prec << attempt);
      std::vector<std::size_t> remaining(part.orbits.size());
      for (std::size_t i = 0; i < remaining.size(); ++i) remaining[i] = i;
      FqPoly rest = target;
      std::vector<FqPoly> factors;
      std::vector<std::vector<std::size_t>> factor_orbits;
      std::int64_t tried = 0;

      for (std::size_t k = 1; !remaining.empty();) {
        std::optional<std::pair<FqPoly, std::vector<std::size_t>>> hit;
        for_each_union(remaining, k, [&](const std::vector<std::size_t>& pick) {
          if (++tried > opt.candidate_cap)
            throw CapExceeded("orbit unions exceed the candidate cap of " + std::to_string(opt.candidate_cap));
          std::vector<const TSeries*> roots;
          for (auto o : pick)
            for (auto r : part.orbits[o]) roots.push_back(&part.roots[r]);
          auto Q = round_union(F, d, roots);
          if (!Q || !try_exact_div(rest, *Q)) return false;
          hit.emplace(std::move(*Q), pick);
          return true;
        });
        if (!hit) {
          if (++k > remaining.size())
            throw PrecisionInsufficient("no union of the remaining orbits rounds to a divisor");
          continue;
        }
        rest = exact_div(rest, hit->first);
        for (auto o : hit->second) remaining.erase(std::find(remaining.begin(), remaining.end(), o));
        factors.push_back(std::move(hit->first));
        factor_orbits.push_back(std::move(hit->second));
      }

      rep.escalations = attempt;
      rep.root_prec = part.root_prec;
      rep.candidates = tried;
      rep.codes = part.codes;
      rep.orbit_partition = part.orbits;
      rep.factor_orbits = std::move(factor_orbits);
      rep.factors = std::move(factors);
      FqPoly prod = FqPoly::constant(F, F.one());
      rep.gauss_ok = true;
      for (const auto& Q : rep.factors) {
        rep.degrees.push_back(Q.deg_z());
        rep.gauss_ok = rep.gauss_ok && Q.is_monic_in_z() && gauss_bound_ok(Q, d);
        prod *= Q;
      }
      rep.product_ok = prod == target;
      return rep;
    } catch (const PrecisionInsufficient&) {
      if (attempt == opt.max_escalations) throw;
    }
  }
  throw PrecisionInsufficient("subset factorization did not converge");
}

ScanReport scan_divisors(const FqPoly& G, long d, long e, std::int64_t cap) {
  if (e < 1) throw DomainError("scan needs degree e >= 1");
  if (G.is_zero() || !G.is_monic_in_z()) throw DomainError("scan needs a polynomial monic in z");
  const FiniteField& F = G.ring();
  ScanReport rep;
  rep.e = e;
  rep.cap = cap;

  // slot layout: q_1's coefficients of c^0, c^1, .., then q_2's, ..
  std::vector<long> slot_r, slot_j;
  for (long r = 1; r <= e; ++r)
    for (long j = 0; j <= r / d; ++j) {
      slot_r.push_back(r);
      slot_j.push_back(j);
    }
  const auto slots = static_cast<std::int64_t>(slot_r.size());
  rep.candidates = checked_count(F.q(), slots, cap);
  if (rep.candidates < 0)
    throw CapExceeded("scan of degree " + std::to_string(e) + " needs " + std::to_string(F.q()) + "^" +
                      std::to_string(slots) + " candidates, above the cap of " + std::to_string(cap));
  if (e > G.deg_z()) return rep;

  const auto elems = F.elements();
  const std::size_t npts = std::min<std::size_t>(elems.size(), 4);
  std::vector<std::vector<FiniteField::Elem>> g_at(npts);
  for (std::size_t t = 0; t < npts; ++t) {
    const auto u = G.eval_c(elems[t]);
    g_at[t].assign(u.coeffs().begin(), u.coeffs().end());
  }

  std::vector<std::size_t> digit(static_cast<std::size_t>(slots), 0);
  std::vector<FiniteField::Elem> q_at(static_cast<std::size_t>(e + 1));
  for (std::int64_t idx = 0; idx < rep.candidates; ++idx) {
    if (idx > 0) {
      std::size_t s = digit.size();
      while (s > 0 && ++digit[s - 1] == elems.size()) digit[--s] = 0;
    }
    bool pass = true;
    for (std::size_t t = 0; t < npts && pass; ++t) {
      std::fill(q_at.begin(), q_at.end(), F.zero());
      q_at[static_cast<std::size_t>(e)] = F.one();
      for (std::size_t s = 0; s < digit.size(); ++s) {
        const auto a = elems[digit[s]];
        if (F.is_zero(a)) continue;
        F.addmul(q_at[static_cast<std::size_t>(e - slot_r[s])], a, F.pow(elems[t], slot_j[s]));
      }
      pass = divides_univariate(F, g_at[t], q_at);
    }
    if (!pass) continue;
    std::vector<std::vector<FiniteField::Elem>> raw(static_cast<std::size_t>(e + 1));
    raw[static_cast<std::size_t>(e)] = {F.one()};
    for (std::size_t s = 0; s < digit.size(); ++s) {
      auto& row = raw[static_cast<std::size_t>(e - slot_r[s])];
      const auto j = static_cast<std::size_t>(slot_j[s]);
      if (row.size() <= j) row.resize(j + 1, F.zero());
      row[j] = elems[digit[s]];
    }
    std::vector<UniPoly<FiniteField>> rows;
    for (auto& r : raw) rows.emplace_back(F, std::move(r));
    FqPoly Q(F, std::move(rows));
    if (try_exact_div(G, Q)) rep.divisors.push_back(std::move(Q));
  }
  return rep;
}

ScanReport bounded_degree_scan(const FiniteField& F, long d, long e, long n, long m, std::int64_t cap) {
  return scan_divisors(difference(F, d, n, m), d, e, cap);
}

std::vector<FqPoly> reduction_factorization(const FiniteField& F, long d, long n, long m, std::int64_t cap) {
  if (m < 0 || n <= m) throw DomainError("f^n - f^m needs n > m >= 0");
  const long k = n - m;
  std::vector<FqPoly> pieces;
  const auto fz = make_family(d, IntegerRing{});
  const CyclotomicIntegers K(d);
  const auto fk = make_family(d, K);
  for (long e : divisors(k)) {
    pieces.push_back(reduce(F, phi(fz, e)));
    for (long i = 1; i <= m; ++i)
      for (long j = 1; j < d; ++j) pieces.push_back(monic_in_z(reduce(F, zeta_component(fk, i, e, j))));
  }
  std::vector<FqPoly> out;
  for (const auto& P : pieces) {
    auto parts = split_by_scan(P, d, cap);
    out.insert(out.end(), parts.begin(), parts.end());
  }
  canonical_order(out);
  return out;
}

void canonical_order(std::vector<FqPoly>& factors) {
  std::vector<std::pair<std::pair<long, std::string>, FqPoly>> keyed;
  for (auto& f : factors) keyed.push_back({{f.deg_z(), to_text(f)}, std::move(f)});
  std::stable_sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  factors.clear();
  for (auto& k : keyed) factors.push_back(std::move(k.second));
}

std::int64_t points_above_infinity(std::int64_t e, std::int64_t d) {
  if (d < 1 || e < 1) throw DomainError("points above infinity need e >= 1 and d >= 1");
  if (e % d != 0)
    throw DomainError("degree " + std::to_string(e) + " is not divisible by " + std::to_string(d) +
                      "; not a factor of f^n - f^m");
  return e / d;
}

std::int64_t ogg_gonality_bound(std::int64_t e, std::int64_t d, std::int64_t q) {
  if (q < 2) throw DomainError("Ogg bound needs q >= 2");
  points_above_infinity(e, d);
  const std::int64_t den = d * (q + 1);
  return (e + den - 1) / den;
}

}  // namespace dynatomic
