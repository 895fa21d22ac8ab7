#pragma once

#include <cstddef>
#include <limits>
#include <string>
#include <optional>
#include <utility>
#include <vector>

#include "dynatomic/error.hpp"
#include "dynatomic/rings.hpp"
#include "dynatomic/unipoly.hpp"

namespace dynatomic {

/// Default cap on z-degrees of constructed polynomials.
inline constexpr long kDefaultMaxDegZ = 20000;

/// Polynomial in z with coefficients in R[c], dense in both variables.
/// rows()[i] is the coefficient of z^i; the top row is never zero.
template <CoefficientRing R>
class BivarPoly {
 public:
  using ring_type = R;
  using value_type = typename R::value_type;
  using Uni = UniPoly<R>;

  explicit BivarPoly(R ring) : ring_(std::move(ring)) {}
  BivarPoly(R ring, std::vector<Uni> rows) : ring_(std::move(ring)), rows_(std::move(rows)) {
    for (const auto& r : rows_)
      if (!ring_.same_context(r.ring())) throw ContextMismatch("row over a different ring");
    trim();
  }

  static BivarPoly constant(R ring, value_type a) {
    auto u = Uni::constant(ring, std::move(a));
    return from_c(std::move(u));
  }
  static BivarPoly from_c(Uni u) {
    R ring = u.ring();
    std::vector<Uni> rows;
    rows.push_back(std::move(u));
    return BivarPoly(std::move(ring), std::move(rows));
  }
  /// a z^i c^j
  static BivarPoly monomial(R ring, value_type a, std::size_t i, std::size_t j) {
    std::vector<Uni> rows(i + 1, Uni(ring));
    rows[i] = Uni::monomial(ring, std::move(a), j);
    return BivarPoly(std::move(ring), std::move(rows));
  }
  static BivarPoly z(R ring) {
    auto one = ring.one();
    return monomial(std::move(ring), std::move(one), 1, 0);
  }
  static BivarPoly c(R ring) {
    auto one = ring.one();
    return monomial(std::move(ring), std::move(one), 0, 1);
  }

  const R& ring() const noexcept { return ring_; }
  long deg_z() const noexcept { return static_cast<long>(rows_.size()) - 1; }
  long deg_c() const noexcept {
    long d = -1;
    for (const auto& r : rows_) d = std::max(d, r.degree());
    return d;
  }
  bool is_zero() const noexcept { return rows_.empty(); }
  const std::vector<Uni>& rows() const noexcept { return rows_; }
  Uni row(std::size_t i) const { return i < rows_.size() ? rows_[i] : Uni(ring_); }
  value_type coeff(std::size_t i, std::size_t j) const { return i < rows_.size() ? rows_[i].coeff(j) : ring_.zero(); }
  bool is_monic_in_z() const { return !rows_.empty() && rows_.back().degree() == 0 && ring_.is_one(rows_.back().coeffs()[0]); }
  std::size_t term_count() const {
    std::size_t n = 0;
    for (const auto& r : rows_) n += r.term_count();
    return n;
  }

  BivarPoly& operator+=(const BivarPoly& o) {
    check(o);
    if (rows_.size() < o.rows_.size()) rows_.resize(o.rows_.size(), Uni(ring_));
    for (std::size_t i = 0; i < o.rows_.size(); ++i) rows_[i] += o.rows_[i];
    trim();
    return *this;
  }
  BivarPoly& operator-=(const BivarPoly& o) {
    check(o);
    if (rows_.size() < o.rows_.size()) rows_.resize(o.rows_.size(), Uni(ring_));
    for (std::size_t i = 0; i < o.rows_.size(); ++i) rows_[i] -= o.rows_[i];
    trim();
    return *this;
  }
  friend BivarPoly operator+(BivarPoly a, const BivarPoly& b) { return a += b; }
  friend BivarPoly operator-(BivarPoly a, const BivarPoly& b) { return a -= b; }
  BivarPoly operator-() const {
    BivarPoly out = *this;
    for (auto& r : out.rows_) r = -r;
    return out;
  }
  friend BivarPoly operator*(const BivarPoly& a, const BivarPoly& b) { return a.multiply(b, kUncapped); }
  BivarPoly& operator*=(const BivarPoly& o) { return *this = multiply(o, kUncapped); }
  friend bool operator==(const BivarPoly& a, const BivarPoly& b) { return a.rows_ == b.rows_; }

  /// Product, refusing results whose z-degree would exceed max_deg_z.
  BivarPoly multiply(const BivarPoly& o, long max_deg_z) const {
    check(o);
    if (is_zero() || o.is_zero()) return BivarPoly(ring_);
    if (deg_z() + o.deg_z() > max_deg_z)
      throw CapExceeded("product z-degree " + std::to_string(deg_z() + o.deg_z()) + " exceeds cap " +
                        std::to_string(max_deg_z));
    const BivarPoly& small = term_count() <= o.term_count() ? *this : o;
    const BivarPoly& large = &small == this ? o : *this;
    std::vector<detail::SparseView<value_type>> views;
    views.reserve(small.rows_.size());
    for (const auto& r : small.rows_) views.push_back(detail::sparse_view(ring_, r.coeffs()));
    std::vector<std::vector<value_type>> out(rows_.size() + o.rows_.size() - 1);
    for (std::size_t i = 0; i < large.rows_.size(); ++i) {
      const auto a = large.rows_[i].coeffs();
      if (a.empty()) continue;
      for (std::size_t j = 0; j < views.size(); ++j)
        detail::accumulate_product(ring_, out[i + j], a, views[j], false);
    }
    return from_raw(ring_, std::move(out));
  }

  BivarPoly pow(unsigned e, long max_deg_z = kDefaultMaxDegZ) const {
    BivarPoly result = constant(ring_, ring_.one());
    BivarPoly base = *this;
    while (e > 0) {
      if (e & 1u) result = result.multiply(base, max_deg_z);
      e >>= 1u;
      if (e) base = base.multiply(base, max_deg_z);
    }
    return result;
  }

  BivarPoly scaled(const value_type& s) const {
    BivarPoly out(ring_);
    out.rows_.reserve(rows_.size());
    for (const auto& r : rows_) out.rows_.push_back(r.scaled(s));
    out.trim();
    return out;
  }
  BivarPoly times_c_poly(const Uni& u) const {
    BivarPoly out(ring_);
    for (const auto& r : rows_) out.rows_.push_back(r * u);
    out.trim();
    return out;
  }

  /// P(s z, c)
  BivarPoly scale_z(const value_type& s) const {
    BivarPoly out(ring_);
    value_type power = ring_.one();
    for (const auto& r : rows_) {
      out.rows_.push_back(r.scaled(power));
      power = ring_.mul(power, s);
    }
    out.trim();
    return out;
  }

  /// P(G(z, c), c) by Horner's rule.
  BivarPoly compose_z(const BivarPoly& g, long max_deg_z = kDefaultMaxDegZ) const {
    check(g);
    if (is_zero()) return *this;
    if (g.deg_z() > 0 && deg_z() * g.deg_z() > max_deg_z)
      throw CapExceeded("composition z-degree " + std::to_string(deg_z() * g.deg_z()) + " exceeds cap " +
                        std::to_string(max_deg_z));
    BivarPoly acc = from_c(rows_.back());
    for (std::size_t i = rows_.size() - 1; i-- > 0;) {
      acc = acc.multiply(g, std::numeric_limits<long>::max());
      acc += from_c(rows_[i]);
    }
    return acc;
  }

  /// P(a(c), c)
  Uni eval_z(const Uni& a) const {
    Uni acc(ring_);
    for (std::size_t i = rows_.size(); i-- > 0;) {
      acc = acc * a;
      acc += rows_[i];
    }
    return acc;
  }

  /// P(z, gamma) as a polynomial in z.
  Uni eval_c(const value_type& gamma) const {
    std::vector<value_type> c;
    c.reserve(rows_.size());
    for (const auto& r : rows_) c.push_back(r.evaluate(gamma));
    return Uni(ring_, std::move(c));
  }

  template <CoefficientRing R2, class F>
  BivarPoly<R2> map_coeffs(R2 target, F&& f) const {
    std::vector<UniPoly<R2>> rows;
    rows.reserve(rows_.size());
    for (const auto& r : rows_) rows.push_back(r.map(target, f));
    return BivarPoly<R2>(std::move(target), std::move(rows));
  }

 private:
  static constexpr long kUncapped = std::numeric_limits<long>::max();

  template <CoefficientRing R2>
  friend std::optional<BivarPoly<R2>> try_exact_div(const BivarPoly<R2>&, const BivarPoly<R2>&);

  static BivarPoly from_raw(const R& ring, std::vector<std::vector<value_type>> raw) {
    BivarPoly out(ring);
    out.rows_.reserve(raw.size());
    for (auto& r : raw) out.rows_.emplace_back(ring, std::move(r));
    out.trim();
    return out;
  }

  void check(const BivarPoly& o) const {
    if (!ring_.same_context(o.ring_))
      throw ContextMismatch("polynomials over different rings: " + ring_.name() + " vs " + o.ring_.name());
  }
  void trim() {
    while (!rows_.empty() && rows_.back().is_zero()) rows_.pop_back();
  }

  R ring_;
  std::vector<Uni> rows_;
};

/// num / den in R[c][z] when the quotient exists; std::nullopt otherwise.
///
/// Long division on z.  Each quotient row is the current top row divided by
/// the leading z-coefficient of den in R[c]; when that coefficient is 1 no
/// division is needed.  Division is exact iff every such step is exact and
/// the final remainder vanishes.
template <CoefficientRing R>
std::optional<BivarPoly<R>> try_exact_div(const BivarPoly<R>& num, const BivarPoly<R>& den) {
  using V = typename R::value_type;
  num.check(den);
  const R& ring = num.ring_;
  if (den.is_zero()) return std::nullopt;
  if (num.is_zero()) return BivarPoly<R>(ring);
  if (num.deg_z() < den.deg_z()) return std::nullopt;

  const std::size_t dn = den.rows_.size() - 1;
  std::vector<std::vector<V>> rem;
  rem.reserve(num.rows_.size());
  for (const auto& r : num.rows_) rem.emplace_back(r.c_);
  std::vector<std::vector<V>> quot(rem.size() - dn);

  const UniPoly<R>& lc = den.rows_[dn];
  const bool unit = lc.degree() == 0 && ring.is_one(lc.c_[0]);
  std::vector<detail::SparseView<V>> views;
  std::vector<std::size_t> active;
  for (std::size_t j = 0; j < dn; ++j) {
    views.push_back(detail::sparse_view(ring, std::span<const V>(den.rows_[j].c_)));
    if (!views.back().index.empty()) active.push_back(j);
  }

  for (std::size_t i = rem.size(); i-- > dn;) {
    detail::trim(ring, rem[i]);
    if (rem[i].empty()) continue;
    std::vector<V> q;
    if (unit) {
      q = std::move(rem[i]);
    } else {
      auto qq = try_divide_exact(UniPoly<R>(ring, std::move(rem[i])), lc);
      if (!qq) return std::nullopt;
      q = std::move(qq->c_);
    }
    for (std::size_t j : active) detail::accumulate_product(ring, rem[i - dn + j], std::span<const V>(q), views[j], true);
    quot[i - dn] = std::move(q);
    rem[i].clear();
  }
  for (std::size_t i = 0; i < dn; ++i) {
    detail::trim(ring, rem[i]);
    if (!rem[i].empty()) return std::nullopt;
  }
  return BivarPoly<R>::from_raw(ring, std::move(quot));
}

/// Exact quotient num / den; throws NonExactDivision otherwise.
template <CoefficientRing R>
BivarPoly<R> exact_div(const BivarPoly<R>& num, const BivarPoly<R>& den) {
  auto q = try_exact_div(num, den);
  if (!q) throw NonExactDivision("bivariate division is not exact (deg_z " + std::to_string(num.deg_z()) + " by " +
                                 std::to_string(den.deg_z()) + ")");
  return std::move(*q);
}

}  // namespace dynatomic
