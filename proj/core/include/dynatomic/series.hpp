#pragma once

// Truncated Laurent series in T over F_q, where T^{-d} = -c, and the coded
// roots of f^n - f^m at c = infinity.

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "dynatomic/bivarpoly.hpp"
#include "dynatomic/finite_field.hpp"

namespace dynatomic {

/// sum_{e >= lo} a_e T^e known for exponents below prec (absolute precision).
/// The stored window starts at a nonzero coefficient; a series with no
/// nonzero coefficient below prec is "zero to precision".
class TSeries {
 public:
  using Elem = FiniteField::Elem;
  /// Precision of series known exactly (finite Laurent polynomials).
  static constexpr long kExact = std::numeric_limits<long>::max() / 4;

  TSeries(FiniteField F, long prec) : F_(std::move(F)), prec_(prec) {}
  /// coeffs[i] multiplies T^{lo + i}.
  TSeries(FiniteField F, long lo, std::vector<Elem> coeffs, long prec);

  static TSeries monomial(FiniteField F, Elem a, long e, long prec = kExact);
  static TSeries one(FiniteField F) { return monomial(F, F.one(), 0); }

  const FiniteField& field() const noexcept { return F_; }
  long prec() const noexcept { return prec_; }
  bool is_exact() const noexcept { return prec_ >= kExact; }
  bool is_zero() const noexcept { return c_.empty(); }
  /// T-order; for a series that is zero to precision this is prec().
  long order() const noexcept { return c_.empty() ? prec_ : lo_; }
  long lo() const noexcept { return order(); }
  const std::vector<Elem>& coeffs() const noexcept { return c_; }
  /// Coefficient of T^e; throws PrecisionInsufficient when e >= prec().
  Elem coeff(long e) const;
  Elem leading() const;

  TSeries truncated(long prec) const;
  /// Multiplication by T^k.
  TSeries shifted(long k) const;
  TSeries scaled(Elem s) const;
  /// The substitution T -> s T.
  TSeries substitute_scale(Elem s) const;
  /// 1 / *this.  For exact input the result is cut at max_prec.
  TSeries inverse(long max_prec = kExact) const;

  TSeries& operator+=(const TSeries& o);
  TSeries& operator-=(const TSeries& o);
  friend TSeries operator+(TSeries a, const TSeries& b) { return a += b; }
  friend TSeries operator-(TSeries a, const TSeries& b) { return a -= b; }
  TSeries operator-() const;
  friend TSeries operator*(const TSeries& a, const TSeries& b);
  TSeries pow(unsigned e) const;

  /// Same precision and the same coefficients below it.
  friend bool operator==(const TSeries& a, const TSeries& b);
  /// True iff a - b is zero below min(prec_a, prec_b) and both are known at
  /// least up to through (a - b has order >= through).
  static bool agree(const TSeries& a, const TSeries& b, long through);

 private:
  void normalize();

  FiniteField F_;
  long lo_ = 0;
  std::vector<Elem> c_;
  long prec_ = kExact;
};

/// g with g^d = u and leading coefficient root; u must have T-order 0.
/// Coefficient recursion g_k = (u_k - [T^k](g_{<k})^d) / (d g_0^{d-1}).
TSeries dth_root_unit(const TSeries& u, long d, TSeries::Elem root, long max_prec = TSeries::kExact);
/// As above with the smallest (by encoding) d-th root of the leading coefficient.
TSeries dth_root_unit(const TSeries& u, long d, long max_prec = TSeries::kExact);

/// c = -T^{-d} as an exact series.
TSeries c_series(const FiniteField& F, long d);

/// The inverse branch omega T^{-1} (1 - c^{-1} z)^{1/d} = omega T^{-1} (1 + T^d z)^{1/d},
/// omega = zeta^symbol.  Requires T-order(z) > -d.
TSeries branch_apply(const FiniteField& F, long d, int symbol, const TSeries& z, long max_prec = TSeries::kExact);

/// z^d + c.
TSeries forward_map(const FiniteField& F, long d, const TSeries& z);

/// Eventually periodic symbol sequence s_1 s_2 ...: the first preperiod
/// symbols, then the last period symbols repeated.
struct BranchCode {
  long preperiod = 0;
  long period = 1;
  std::vector<int> symbols;

  BranchCode() = default;
  BranchCode(long preperiod, long period, std::vector<int> symbols);

  /// s_i for i >= 1.
  int at(long i) const;
  std::string str() const;
  friend bool operator==(const BranchCode&, const BranchCode&) = default;

  /// The d^n codes of roots of f^n - f^m (s_{i+n} = s_{i+m}), in
  /// lexicographic order of s_1 .. s_n.
  static std::vector<BranchCode> for_preperiodic(long d, long n, long m);
};

/// The root [s_1 s_2 ...] to absolute precision prec.
TSeries coded_root(const FiniteField& F, long d, const BranchCode& code, long prec);

struct SplittingRoot {
  BranchCode code;
  TSeries series;
  long residual_order = 0;
};

struct SplittingReport {
  long d = 0, p = 0, q = 0, n = 0, m = 0;
  long prec = 0;
  long root_prec = 0;
  int escalations = 0;
  long count = 0;
  long expected_count = 0;
  bool orders_ok = false;
  bool distinct_ok = false;
  bool residual_ok = false;
  long min_residual_order = 0;
  bool reconstruction_ok = false;
  bool leading_ok = false;
  std::vector<SplittingRoot> roots;

  bool ok() const {
    return count == expected_count && orders_ok && distinct_ok && residual_ok && reconstruction_ok && leading_ok;
  }
};

/// f^n - f^m over F_q mapped into F_q((T)) by c^j -> (-1)^j T^{-dj}.
std::vector<TSeries> coefficient_series(const BivarPoly<FiniteField>& P, long d);

/// prod_i (X - r_i); entry k multiplies X^k.
std::vector<TSeries> monic_from_roots(const FiniteField& F, const std::vector<const TSeries*>& roots);

/// Coded roots of f^n - f^m and the checks of complete splitting.  Doubles the
/// root precision up to max_escalations times while roots are not yet
/// separated; throws PrecisionInsufficient after that.
SplittingReport verify_splitting(const FiniteField& F, long d, long n, long m, long prec = 32, int max_escalations = 4);

}  // namespace dynatomic
