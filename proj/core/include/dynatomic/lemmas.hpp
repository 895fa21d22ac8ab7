#pragma once

// Characteristic-zero checks on the fibre z = 0 of the zeta-components, over
// Q(zeta_d).

#include <cstdint>
#include <optional>
#include <string>

#include "dynatomic/cyclotomic.hpp"
#include "dynatomic/unipoly.hpp"

namespace dynatomic {

using CycPoly = UniPoly<CyclotomicField>;

/// f^k(0) in Z[c] mapped into Q(zeta_d)[c], for k = 0..upto.
std::vector<CycPoly> critical_orbit(const CyclotomicField& K, long d, long upto);

/// Phi_n(zeta^{-j} f^{m-1}(0), c) in Q(zeta_d)[c].
CycPoly zero_fiber_poly(long d, long m, long n, long j);

/// Phi_n(0, c) in Q(zeta_d)[c].
CycPoly phi_at_zero(long d, long n);

/// Phi_{m,n}(0, c) in Q(zeta_d)[c].
CycPoly phi_mn_at_zero(long d, long m, long n);

struct SimpleRootsReport {
  long d = 0, m = 0, n = 0, j = 0;
  long degree = 0;
  /// d^{m-2} D1(n); absent for m = 1, where no count is asserted.
  std::optional<std::int64_t> expected_degree;
  bool squarefree = false;
  std::optional<bool> degree_ok;
  /// "modular": P mod a prime of Z[zeta] above p keeps its degree and is
  /// squarefree there, so disc(P) != 0.  "exact": gcd(P, P') over Q(zeta).
  std::string method;

  bool ok() const { return squarefree && degree_ok.value_or(true); }
};

/// Squarefreeness and root count of zero_fiber_poly(d, m, n, j).
SimpleRootsReport verify_simple_roots(long d, long m, long n, long j, bool force_exact = false);

struct Factorization2Report {
  long d = 0, m = 0, n = 0;
  /// Phi_n(0, c) divides every Phi_n(zeta^{-j} f^{m-1}(0), c).
  bool divisibility_ok = false;
  /// Phi_n(0, c)^{d-1} divides Phi_{m,n}(0, c).
  bool lhs_exact = false;
  bool holds = false;
};

/// Phi_{m,n}(0,c) / Phi_n(0,c)^{d-1} = prod_j Phi_n(zeta^{-j} f^{m-1}(0), c) / Phi_n(0,c),
/// for n | m - 1.
Factorization2Report verify_factorization2(long d, long m, long n);

/// (d - 1) d^{m-2} D1(n).
std::int64_t ramification_lower_bound(long d, long m, long n);

}  // namespace dynatomic
