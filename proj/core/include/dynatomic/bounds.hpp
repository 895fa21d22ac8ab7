#pragma once

// Degree and gonality bounds in exact rational arithmetic.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace dynatomic {

enum class BoundMode { ExactFormula, AsymptoticLeadingTerm, UserSuppliedGenus };

std::string to_string(BoundMode mode);

struct BoundReport {
  std::string name;
  std::vector<std::pair<std::string, std::string>> inputs;
  mpq_class value;
  BoundMode mode = BoundMode::ExactFormula;
  std::vector<std::string> caveats;
  std::vector<std::string> derivation;
  /// tower only: gamma_1 .. gamma_{m_max}.
  std::vector<mpz_class> sequence;
  /// x0 bounds only: 1/2 - 1/(2d).
  std::optional<mpq_class> leading_coefficient;
};

/// d1 g1 + d2 g2 + (d1 - 1)(d2 - 1).
mpz_class castelnuovo_severi(const mpz_class& g1, const mpz_class& g2, const mpz_class& d1, const mpz_class& d2);

/// Lower bound on the gonality of X0(n): min(D0, 1 + ceil(g / (D0 - 1))) with
/// g the supplied genus lower bound, or (1/2 - 1/(2d) - 1/n) d^n (clamped at 0)
/// when genus_lower is empty.
BoundReport x0_case_bounds(long d, long n, const std::optional<mpz_class>& genus_lower);

/// Lower bounds gamma_1 .. gamma_{m_max} along the tower X1(m, n).  Without
/// genera, case II uses the ramification count (d-1) d^{m-2} D1(n); with
/// genera g_1 .. g_{m_max}, it uses 1 + (g_m - d g_{m-1}) / (d - 1).
BoundReport tower_recursion(long d, long n, const mpz_class& gamma1, long m_max,
                            const std::optional<std::vector<mpz_class>>& genera = std::nullopt);

/// n d^n.
mpz_class preperiodic_count_bound(long d, long n);

/// q0^D.
mpz_class finite_field_constant_bound(long q0, long D);

mpz_class ceil_div(const mpq_class& x);

}  // namespace dynatomic
