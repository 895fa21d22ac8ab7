#pragma once

// Factoring f^n - f^m over F_q(c) at small sizes: unions of local Galois
// orbits of the coded roots, an exhaustive scan of divisors with the Gauss
// coefficient bound, and the point count above c = infinity.

#include <cstdint>
#include <vector>

#include "dynatomic/bivarpoly.hpp"
#include "dynatomic/finite_field.hpp"
#include "dynatomic/series.hpp"

namespace dynatomic {

using FqPoly = BivarPoly<FiniteField>;

struct OrbitPartition {
  std::vector<BranchCode> codes;
  std::vector<TSeries> roots;
  /// Indices into codes; each orbit starts at its smallest index and follows T -> zeta T.
  std::vector<std::vector<std::size_t>> orbits;
  long root_prec = 0;
};

/// Orbits of T -> zeta T on the d^n coded roots of f^n - f^m computed to
/// precision prec (plus the separation margin).  Throws PrecisionInsufficient
/// when the image of a root cannot be matched uniquely.
OrbitPartition local_orbits(const FiniteField& F, long d, long n, long m, long prec = 32);

/// Every z^{e-r} coefficient q_r of the monic Q has deg_c q_r <= floor(r / d).
bool gauss_bound_ok(const FqPoly& Q, long d);

struct SubsetOptions {
  long prec = 32;
  long max_orbits = 64;
  std::int64_t candidate_cap = 1'000'000;
  int max_escalations = 4;
};

struct FactorReport {
  long d = 0, p = 0, q = 0, n = 0, m = 0;
  long prec = 0;
  long root_prec = 0;
  int escalations = 0;
  std::int64_t candidates = 0;
  std::vector<FqPoly> factors;
  /// factor_orbits[i] lists the orbits (indices into orbit_partition) whose roots make up factors[i].
  std::vector<std::vector<std::size_t>> factor_orbits;
  std::vector<std::vector<std::size_t>> orbit_partition;
  std::vector<BranchCode> codes;
  std::vector<long> degrees;
  bool product_ok = false;
  bool gauss_ok = false;

  bool ok() const { return product_ok && gauss_ok; }
};

/// Factorization of f^n - f^m over F_q(c) from minimal unions of local orbits,
/// each certified by exact division.  Unions are tried by size, then
/// lexicographically; precision is doubled when a union cannot be rounded.
FactorReport subset_factor(const FiniteField& F, long d, long n, long m, const SubsetOptions& opt = {});

struct ScanReport {
  long e = 0;
  /// q^{sum_{r=1}^e (floor(r/d) + 1)}: the size of the search space.
  std::int64_t candidates = 0;
  std::int64_t cap = 0;
  bool truncated = false;
  std::vector<FqPoly> divisors;
};

inline constexpr std::int64_t kDefaultScanCap = 10'000'000;

/// All monic Q of z-degree e with deg_c q_r <= floor(r / d) dividing G in
/// F_q[c][z], in lexicographic order of (q_1, .., q_e).  Throws CapExceeded when
/// the search space exceeds cap.
ScanReport scan_divisors(const FqPoly& G, long d, long e, std::int64_t cap = kDefaultScanCap);

/// scan_divisors on f^n - f^m.
ScanReport bounded_degree_scan(const FiniteField& F, long d, long e, long n, long m,
                               std::int64_t cap = kDefaultScanCap);

/// Factorization of f^n - f^m from characteristic 0: Phi_e and the
/// zeta-components Phi_e(zeta^{-j} f^{i-1}(z)) for e | n - m, reduced to F_q,
/// then split wherever the scan finds a proper divisor.
std::vector<FqPoly> reduction_factorization(const FiniteField& F, long d, long n, long m,
                                            std::int64_t cap = kDefaultScanCap);

/// Sorts factors by z-degree, then by their text form.
void canonical_order(std::vector<FqPoly>& factors);

/// Places of a degree-e factor above c = infinity: e / d.
std::int64_t points_above_infinity(std::int64_t e, std::int64_t d);

/// ceil(e / (d (q + 1))).
std::int64_t ogg_gonality_bound(std::int64_t e, std::int64_t d, std::int64_t q);

}  // namespace dynatomic
