#include "dynatomic/lemmas.hpp"

#include "dynatomic/dynatomic.hpp"
#include "dynatomic/finite_field.hpp"
#include "dynatomic/number_theory.hpp"

namespace dynatomic {

std::vector<CycPoly> critical_orbit(const CyclotomicField& K, long d, long upto) {
  std::vector<CycPoly> out;
  out.emplace_back(K);
  const CycPoly c = CycPoly::variable(K);
  for (long k = 1; k <= upto; ++k) out.push_back(out.back().pow(static_cast<unsigned>(d)) + c);
  return out;
}

namespace {

// prod_{e | n} (a[e + s] - w a[s])^{mu(n/e)}
CycPoly orbit_quotient(const std::vector<CycPoly>& a, long n, long s, const CyclotomicField::value_type& w) {
  const auto& K = a.front().ring();
  CycPoly num = CycPoly::constant(K, K.one()), den = num;
  const CycPoly ws = a[static_cast<std::size_t>(s)].scaled(w);
  for (long e : divisors(n)) {
    const int mu = moebius(n / e);
    if (mu == 0) continue;
    (mu > 0 ? num : den) *= a[static_cast<std::size_t>(e + s)] - ws;
  }
  return divide_exact(num, den);
}

void check_args(long d, long m, long n) {
  if (d < 2 || m < 1 || n < 1) throw DomainError("zero fibre needs d >= 2, m >= 1, n >= 1");
}

// Image of P under Z[zeta]_(p) -> F_p with zeta -> gen_zeta; nullopt when a
// denominator vanishes mod p.
std::optional<UniPoly<FiniteField>> reduce_rational(const FiniteField& F, long d, const CycPoly& P) {
  const auto z = zeta_d_power(F, d, 1);
  const unsigned long p = static_cast<unsigned long>(F.p());
  std::vector<FiniteField::Elem> out;
  for (const auto& a : P.coeffs()) {
    auto acc = F.zero(), power = F.one();
    for (const auto& x : a) {
      const unsigned long den = mpz_fdiv_ui(x.get_den_mpz_t(), p);
      if (den == 0) return std::nullopt;
      const auto v = F.mul(F.from_int(static_cast<long>(mpz_fdiv_ui(x.get_num_mpz_t(), p))),
                           F.inv(F.from_int(static_cast<long>(den))));
      F.addmul(acc, v, power);
      power = F.mul(power, z);
    }
    out.push_back(acc);
  }
  return UniPoly<FiniteField>(F, std::move(out));
}

bool modular_squarefree(long d, const CycPoly& P) {
  std::int64_t p = std::max<std::int64_t>(10007, P.degree() + 1);
  for (int tries = 0; tries < 6; ++p) {
    if (p % d != 1 || !is_prime(p)) continue;
    ++tries;
    const auto F = FiniteField::build(p, d);
    auto r = reduce_rational(F, d, P);
    if (!r || r->degree() != P.degree()) continue;
    if (is_squarefree(*r)) return true;
  }
  return false;
}

}  // namespace

CycPoly zero_fiber_poly(long d, long m, long n, long j) {
  check_args(d, m, n);
  if (j < 1 || j >= d) throw DomainError("zeta index must lie in 1..d-1");
  const CyclotomicField K(d);
  const auto a = critical_orbit(K, d, n + m - 1);
  return orbit_quotient(a, n, m - 1, K.zeta_power(-j));
}

CycPoly phi_at_zero(long d, long n) {
  check_args(d, 1, n);
  const CyclotomicField K(d);
  return orbit_quotient(critical_orbit(K, d, n), n, 0, K.one());
}

CycPoly phi_mn_at_zero(long d, long m, long n) {
  check_args(d, m, n);
  const CyclotomicField K(d);
  const auto a = critical_orbit(K, d, n + m);
  CycPoly num = CycPoly::constant(K, K.one()), den = num;
  for (long e : divisors(n)) {
    const int mu = moebius(n / e);
    if (mu == 0) continue;
    CycPoly upper = a[static_cast<std::size_t>(e + m)] - a[static_cast<std::size_t>(m)];
    CycPoly lower = a[static_cast<std::size_t>(e + m - 1)] - a[static_cast<std::size_t>(m - 1)];
    num *= mu > 0 ? upper : lower;
    den *= mu > 0 ? lower : upper;
  }
  return divide_exact(num, den);
}

SimpleRootsReport verify_simple_roots(long d, long m, long n, long j, bool force_exact) {
  SimpleRootsReport r;
  r.d = d;
  r.m = m;
  r.n = n;
  r.j = j;
  const CycPoly P = zero_fiber_poly(d, m, n, j);
  r.degree = P.degree();
  if (m >= 2) {
    r.expected_degree = checked_pow(d, static_cast<std::uint64_t>(m - 2)) * deg_D1(d, n);
    r.degree_ok = r.degree == *r.expected_degree;
  }
  if (!force_exact && modular_squarefree(d, P)) {
    r.method = "modular";
    r.squarefree = true;
  } else {
    r.method = "exact";
    r.squarefree = is_squarefree(P);
  }
  return r;
}

Factorization2Report verify_factorization2(long d, long m, long n) {
  check_args(d, m, n);
  if ((m - 1) % n != 0) throw DomainError("factorization at z = 0 needs n | m - 1");
  Factorization2Report r;
  r.d = d;
  r.m = m;
  r.n = n;
  const CycPoly base = phi_at_zero(d, n);
  const auto lhs = try_divide_exact(phi_mn_at_zero(d, m, n), base.pow(static_cast<unsigned>(d - 1)));
  r.lhs_exact = lhs.has_value();
  const CyclotomicField& K = base.ring();
  CycPoly rhs = CycPoly::constant(K, K.one());
  r.divisibility_ok = true;
  for (long j = 1; j < d; ++j) {
    auto q = try_divide_exact(zero_fiber_poly(d, m, n, j), base);
    if (!q) {
      r.divisibility_ok = false;
      continue;
    }
    rhs *= *q;
  }
  r.holds = r.lhs_exact && r.divisibility_ok && *lhs == rhs;
  return r;
}

std::int64_t ramification_lower_bound(long d, long m, long n) {
  if (m < 2) throw DomainError("ramification bound needs m >= 2");
  return (d - 1) * checked_pow(d, static_cast<std::uint64_t>(m - 2)) * deg_D1(d, n);
}

}  // namespace dynatomic
