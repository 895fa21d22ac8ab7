#include "dynatomic/dynatomic.hpp"

#include <algorithm>
#include <random>

#include <gmp.h>

namespace dynatomic {

std::int64_t deg_D1(std::int64_t d, std::int64_t n) {
  if (d < 2 || n < 1) throw DomainError("deg_D1 needs d >= 2 and n >= 1");
  std::int64_t sum = 0;
  for (auto e : divisors(n)) sum += moebius(n / e) * checked_pow(d, static_cast<std::uint64_t>(e));
  return sum;
}

std::int64_t deg_D0(std::int64_t d, std::int64_t n) {
  const auto d1 = deg_D1(d, n);
  if (d1 % n != 0) throw Error("D1(" + std::to_string(n) + ") = " + std::to_string(d1) + " is not divisible by n");
  return d1 / n;
}

namespace detail {
namespace {

static_assert(GMP_NUMB_BITS == 64, "limb packing assumes 64-bit limbs");

// Below this many terms the schoolbook product is faster than packing.
constexpr std::size_t kKroneckerThreshold = 400;

// g^d for g(u, c) with nonnegative integer coefficients, by Kronecker
// substitution: pack g into one integer with fixed-width slots, raise it to
// the d-th power with GMP, unpack.  Slots are wide enough for g(1, 1)^d, which
// bounds every coefficient of the result, so no carries cross slot borders.
//
// Every term u^i c^j of an iterate has i + j = 1 mod (d - 1), so the slot grid
// is indexed by (i, s) with s = (i + j - 1) / (d - 1); a product of d such
// terms lands on J = (d - 1) S + d - I.  rows[i][j] is the coefficient of
// u^i c^j.
std::vector<std::vector<mpz_class>> kronecker_power(const std::vector<std::vector<mpz_class>>& rows, long d) {
  const std::size_t dd = static_cast<std::size_t>(d);
  std::size_t s_max = 0;
  mpz_class sum = 0;
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) {
      if (sgn(rows[i][j]) == 0) continue;
      if (i + j == 0 || (i + j - 1) % (dd - 1) != 0) throw Error("kronecker_power: input is not an iterate");
      s_max = std::max(s_max, (i + j - 1) / (dd - 1));
      sum += rows[i][j];
    }
  mpz_class bound;
  mpz_pow_ui(bound.get_mpz_t(), sum.get_mpz_t(), static_cast<unsigned long>(d));
  const std::size_t limbs = mpz_size(bound.get_mpz_t());
  const std::size_t out_u = (rows.size() - 1) * dd;
  const std::size_t stride = s_max * dd + 1;

  mpz_class packed;
  const std::size_t in_slots = (rows.size() - 1) * stride + s_max + 1;
  mp_limb_t* w = mpz_limbs_write(packed.get_mpz_t(), static_cast<mp_size_t>(in_slots * limbs));
  std::fill(w, w + in_slots * limbs, mp_limb_t{0});
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) {
      const mpz_srcptr x = rows[i][j].get_mpz_t();
      if (mpz_sgn(x) == 0) continue;
      const std::size_t slot = i * stride + (i + j - 1) / (dd - 1);
      std::copy_n(mpz_limbs_read(x), mpz_size(x), w + slot * limbs);
    }
  mpz_limbs_finish(packed.get_mpz_t(), static_cast<mp_size_t>(in_slots * limbs));

  mpz_class result;
  mpz_pow_ui(result.get_mpz_t(), packed.get_mpz_t(), static_cast<unsigned long>(d));
  packed = 0;

  const mp_limb_t* r = mpz_limbs_read(result.get_mpz_t());
  const std::size_t total = mpz_size(result.get_mpz_t());
  std::vector<std::vector<mpz_class>> out(out_u + 1);
  for (std::size_t i = 0; i <= out_u; ++i) {
    for (std::size_t s = 0; s < stride; ++s) {
      const std::size_t at = (i * stride + s) * limbs;
      if (at >= total) break;
      std::size_t n = std::min(limbs, total - at);
      while (n > 0 && r[at + n - 1] == 0) --n;
      if (n == 0) continue;
      const std::size_t j = (dd - 1) * s + dd - i;
      auto& row = out[i];
      if (row.size() <= j) row.resize(j + 1);
      mpz_t view;
      mpz_roinit_n(view, r + at, static_cast<mp_size_t>(n));
      row[j] = mpz_class(view);
    }
  }
  return out;
}

}  // namespace

std::vector<BivarPoly<IntegerRing>> integer_iterates(long d, long upto) {
  using B = BivarPoly<IntegerRing>;
  const IntegerRing Z;
  std::vector<B> out;
  out.push_back(B::z(Z));
  if (upto < 1) return out;
  // f^k(z) = g_k(z^d) with g_1 = u + c and g_k = g_{k-1}^d + c.
  std::vector<std::vector<mpz_class>> g = {{0, 1}, {1}};
  auto to_z = [&](const std::vector<std::vector<mpz_class>>& rows) {
    std::vector<UniPoly<IntegerRing>> zr((rows.size() - 1) * static_cast<std::size_t>(d) + 1, UniPoly<IntegerRing>(Z));
    for (std::size_t i = 0; i < rows.size(); ++i) zr[i * static_cast<std::size_t>(d)] = UniPoly<IntegerRing>(Z, rows[i]);
    return B(Z, std::move(zr));
  };
  out.push_back(to_z(g));
  for (long k = 2; k <= upto; ++k) {
    std::size_t terms = 0;
    for (const auto& r : g)
      for (const auto& x : r) terms += sgn(x) != 0;
    if (terms < kKroneckerThreshold) {
      std::vector<UniPoly<IntegerRing>> ur;
      for (const auto& r : g) ur.emplace_back(Z, r);
      const B gu = B(Z, std::move(ur)).pow(static_cast<unsigned>(d), std::numeric_limits<long>::max());
      g.clear();
      for (const auto& r : gu.rows()) g.emplace_back(r.coeffs().begin(), r.coeffs().end());
    } else {
      g = kronecker_power(g, d);
    }
    if (g[0].empty()) g[0].push_back(0);
    if (g[0].size() < 2) g[0].resize(2, 0);
    g[0][1] += 1;
    out.push_back(to_z(g));
  }
  return out;
}

}  // namespace detail

namespace {

using ZZeta = CyclotomicIntegers;

std::vector<BivarPoly<ZZeta>> components(long d, long m, long n, long max_deg_z) {
  auto fp = make_family(d, ZZeta(d), max_deg_z);
  std::vector<BivarPoly<ZZeta>> out;
  for (long j = 1; j < d; ++j) out.push_back(zeta_component(fp, m, n, j));
  return out;
}

// Smallest prime p = 1 mod d at or above lo, so that F_p contains mu_d.
std::int64_t split_prime(long d, std::int64_t lo) {
  for (std::int64_t p = lo;; ++p)
    if (p % d == 1 && is_prime(p)) return p;
}

// Phi_n(w) at a point of F_p from the definition; nullopt when a denominator
// factor vanishes.
std::optional<FiniteField::Elem> phi_value(const FiniteField& F, long n, FiniteField::Elem w, FiniteField::Elem c,
                                           long d) {
  auto num = F.one(), den = F.one();
  for (long e : divisors(n)) {
    const int mu = moebius(n / e);
    if (mu == 0) continue;
    auto x = w;
    for (long k = 0; k < e; ++k) x = F.add(F.pow(x, d), c);
    const auto diff = F.sub(x, w);
    if (mu > 0)
      num = F.mul(num, diff);
    else
      den = F.mul(den, diff);
  }
  if (F.is_zero(den)) return std::nullopt;
  return F.mul(num, F.inv(den));
}

}  // namespace

bool check_zeta_factorization_direct(long d, long m, long n, long max_deg_z) {
  ZZeta K(d);
  auto comps = components(d, m, n, max_deg_z);
  auto prod = BivarPoly<ZZeta>::constant(K, K.one());
  for (const auto& c : comps) prod = prod.multiply(c, max_deg_z);
  auto fz = make_family(d, IntegerRing{}, max_deg_z);
  return prod == embed(K, phi_mn(fz, m, n));
}

ZetaCheckResult check_zeta_factorization(long d, long m, long n, const ZetaCheckOptions& opt) {
  if (d < 2 || m < 1 || n < 1) throw DomainError("zeta factorization needs d >= 2, m >= 1, n >= 1");
  ZetaCheckResult res;
  ZZeta K(d);
  auto comps = components(d, m, n, opt.max_deg_z);
  const double t = static_cast<double>(comps.front().term_count());
  const double phi2 = static_cast<double>(K.dimension() * K.dimension());
  for (long k = 1; k + 1 < d; ++k) res.estimated_cost += static_cast<double>(k) * t * t * phi2;

  if (m == 1 || res.estimated_cost <= opt.direct_budget) {
    res.route = "direct";
    auto prod = BivarPoly<ZZeta>::constant(K, K.one());
    for (const auto& c : comps) prod = prod.multiply(c, opt.max_deg_z);
    auto fz = make_family(d, IntegerRing{}, opt.max_deg_z);
    res.holds = prod == embed(K, phi_mn(fz, m, n));
    return res;
  }

  res.route = "lifted";
  if (!check_zeta_factorization_direct(d, 1, n, opt.max_deg_z)) return res;

  const auto F = FiniteField::build(split_prime(d, 1000003), d);
  std::vector<BivarPoly<FiniteField>> reduced;
  for (const auto& c : comps) reduced.push_back(reduce(F, c));
  std::mt19937_64 rng(0x5eed0000u + static_cast<unsigned>(1000 * d + 100 * m + n));
  std::uniform_int_distribution<std::int64_t> pick(0, F.p() - 1);
  int done = 0;
  for (int attempt = 0; done < opt.spot_checks && attempt < 20 * opt.spot_checks; ++attempt) {
    const auto z0 = F.from_int(static_cast<long>(pick(rng)));
    const auto c0 = F.from_int(static_cast<long>(pick(rng)));
    auto fm1 = z0;
    for (long k = 0; k + 1 < m; ++k) fm1 = F.add(F.pow(fm1, d), c0);
    const auto fm = F.add(F.pow(fm1, d), c0);
    auto top = phi_value(F, n, fm, c0, d);
    auto bottom = phi_value(F, n, fm1, c0, d);
    if (!top || !bottom || F.is_zero(*bottom)) continue;
    const auto lhs = F.mul(*top, F.inv(*bottom));
    auto rhs = F.one();
    for (const auto& c : reduced) rhs = F.mul(rhs, c.eval_c(c0).evaluate(z0));
    if (!F.equal(lhs, rhs)) return res;
    ++done;
  }
  res.spot_checks = done;
  res.holds = done == opt.spot_checks;
  return res;
}

}  // namespace dynatomic
