#include "dynatomic/bounds.hpp"

#include <algorithm>

#include "dynatomic/dynatomic.hpp"
#include "dynatomic/error.hpp"
#include "dynatomic/number_theory.hpp"

namespace dynatomic {

std::string to_string(BoundMode mode) {
  switch (mode) {
    case BoundMode::ExactFormula: return "exact-formula";
    case BoundMode::AsymptoticLeadingTerm: return "asymptotic-leading-term";
    case BoundMode::UserSuppliedGenus: return "user-supplied-genus";
  }
  return "unknown";
}

mpz_class ceil_div(const mpq_class& x) {
  mpz_class out;
  mpz_cdiv_q(out.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return out;
}

mpz_class castelnuovo_severi(const mpz_class& g1, const mpz_class& g2, const mpz_class& d1, const mpz_class& d2) {
  return d1 * g1 + d2 * g2 + (d1 - 1) * (d2 - 1);
}

BoundReport x0_case_bounds(long d, long n, const std::optional<mpz_class>& genus_lower) {
  if (d < 2 || n < 1) throw DomainError("x0 bounds need d >= 2 and n >= 1");
  const mpz_class D0 = deg_D0(d, n);
  if (D0 == 1)
    throw DomainError("D0(" + std::to_string(n) + ") = 1 for d = " + std::to_string(d) + "; case II divides by zero");
  BoundReport r;
  r.name = "x0";
  r.inputs = {{"d", std::to_string(d)}, {"n", std::to_string(n)}};
  r.leading_coefficient = mpq_class(1, 2) - mpq_class(1, 2 * d);
  mpq_class g;
  if (genus_lower) {
    if (*genus_lower < 0) throw DomainError("genus lower bound must be >= 0");
    g = *genus_lower;
    r.mode = BoundMode::UserSuppliedGenus;
    r.inputs.emplace_back("genus_lower", genus_lower->get_str());
  } else {
    g = (mpq_class(1, 2) - mpq_class(1, 2 * d) - mpq_class(1, n)) * mpq_class(ipow(d, static_cast<std::uint64_t>(n)));
    g.canonicalize();
    if (g < 0) g = 0;
    r.mode = BoundMode::AsymptoticLeadingTerm;
    r.caveats.push_back("genus replaced by the leading term (1/2 - 1/(2d) - 1/n) d^n; the O(n d^(n/2)) term is dropped, so the value is not a proven bound");
  }
  const mpz_class case2 = 1 + ceil_div(g / mpq_class(D0 - 1));
  r.value = std::min<mpz_class>(D0, case2);
  r.derivation = {"D0 = " + D0.get_str(), "genus = " + g.get_str(), "case I: " + D0.get_str(),
                  "case II: 1 + ceil(genus / (D0 - 1)) = " + case2.get_str()};
  return r;
}

BoundReport tower_recursion(long d, long n, const mpz_class& gamma1, long m_max,
                            const std::optional<std::vector<mpz_class>>& genera) {
  if (d < 2 || n < 1) throw DomainError("tower needs d >= 2 and n >= 1");
  if (m_max < 2) throw DomainError("tower needs m_max >= 2");
  if (gamma1 < 1) throw DomainError("gamma_1 lower bound must be >= 1");
  if (genera && static_cast<long>(genera->size()) != m_max)
    throw DomainError("genus sequence needs g_1 .. g_m_max");
  BoundReport r;
  r.name = "tower";
  r.inputs = {{"d", std::to_string(d)}, {"n", std::to_string(n)}, {"gamma1", gamma1.get_str()},
              {"m_max", std::to_string(m_max)}};
  r.mode = genera ? BoundMode::UserSuppliedGenus : BoundMode::ExactFormula;
  const mpz_class D1 = deg_D1(d, n);
  mpz_class gamma = gamma1;
  r.derivation.push_back("gamma_1 >= " + gamma.get_str());
  r.sequence.push_back(gamma);
  for (long m = 2; m <= m_max; ++m) {
    const mpz_class case1 = 2 * gamma;
    mpq_class growth;  // lower bound on g_m - d g_{m-1}
    if (genera) {
      growth = mpq_class((*genera)[static_cast<std::size_t>(m - 1)] - d * (*genera)[static_cast<std::size_t>(m - 2)]);
    } else {
      const mpz_class ram = (d - 1) * ipow(d, static_cast<std::uint64_t>(m - 2)) * D1;
      growth = mpq_class(ram, 2) - (d - 1);
    }
    growth.canonicalize();
    const mpz_class case2 = 1 + ceil_div(growth / (d - 1));
    gamma = std::min(case1, case2);
    r.sequence.push_back(gamma);
    r.derivation.push_back("gamma_" + std::to_string(m) + " >= min(" + case1.get_str() + ", " + case2.get_str() +
                           ") = " + gamma.get_str());
  }
  r.value = gamma;
  return r;
}

mpz_class preperiodic_count_bound(long d, long n) {
  if (d < 2 || n < 1) throw DomainError("count bound needs d >= 2 and n >= 1");
  return n * ipow(d, static_cast<std::uint64_t>(n));
}

mpz_class finite_field_constant_bound(long q0, long D) {
  if (q0 < 2 || D < 1) throw DomainError("constant-field bound needs q0 >= 2 and D >= 1");
  return ipow(q0, static_cast<std::uint64_t>(D));
}

}  // namespace dynatomic
