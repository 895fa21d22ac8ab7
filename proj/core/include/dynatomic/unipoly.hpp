#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "dynatomic/error.hpp"
#include "dynatomic/rings.hpp"

namespace dynatomic {

template <CoefficientRing R>
class BivarPoly;

namespace detail {

// Nonzero entries of a coefficient vector, for inner loops that reuse one
// operand many times.
template <class V>
struct SparseView {
  std::vector<std::size_t> index;
  std::vector<const V*> value;
};

template <class R>
SparseView<typename R::value_type> sparse_view(const R& ring, std::span<const typename R::value_type> a) {
  SparseView<typename R::value_type> out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (ring.is_zero(a[i])) continue;
    out.index.push_back(i);
    out.value.push_back(&a[i]);
  }
  return out;
}

// out += a * b (or -=), growing out as needed; out is left untrimmed.
template <class R>
void accumulate_product(const R& ring, std::vector<typename R::value_type>& out,
                        std::span<const typename R::value_type> a,
                        const SparseView<typename R::value_type>& b, bool subtract) {
  if (a.empty() || b.index.empty()) return;
  const std::size_t need = a.size() + b.index.back();
  if (out.size() < need) out.resize(need, ring.zero());
  const std::size_t nb = b.index.size();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (ring.is_zero(a[i])) continue;
    auto* dst = out.data() + i;
    for (std::size_t t = 0; t < nb; ++t) {
      if (subtract)
        ring.submul(dst[b.index[t]], a[i], *b.value[t]);
      else
        ring.addmul(dst[b.index[t]], a[i], *b.value[t]);
    }
  }
}

template <class R>
void trim(const R& ring, std::vector<typename R::value_type>& a) {
  while (!a.empty() && ring.is_zero(a.back())) a.pop_back();
}

}  // namespace detail

/// Dense univariate polynomial (in c) over a coefficient ring; coefficient i
/// multiplies c^i and trailing zeros are always trimmed.
template <CoefficientRing R>
class UniPoly {
 public:
  using ring_type = R;
  using value_type = typename R::value_type;

  explicit UniPoly(R ring) : ring_(std::move(ring)) {}
  UniPoly(R ring, std::vector<value_type> coeffs) : ring_(std::move(ring)), c_(std::move(coeffs)) {
    detail::trim(ring_, c_);
  }

  static UniPoly constant(R ring, value_type a) {
    std::vector<value_type> c;
    c.push_back(std::move(a));
    return UniPoly(std::move(ring), std::move(c));
  }
  static UniPoly monomial(R ring, value_type a, std::size_t exponent) {
    std::vector<value_type> c(exponent + 1, ring.zero());
    c[exponent] = std::move(a);
    return UniPoly(std::move(ring), std::move(c));
  }
  /// The polynomial c.
  static UniPoly variable(R ring) {
    auto one = ring.one();
    return monomial(std::move(ring), std::move(one), 1);
  }

  const R& ring() const noexcept { return ring_; }
  long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  std::size_t size() const noexcept { return c_.size(); }
  std::span<const value_type> coeffs() const noexcept { return c_; }
  value_type coeff(std::size_t i) const { return i < c_.size() ? c_[i] : ring_.zero(); }
  const value_type& leading() const {
    if (c_.empty()) throw DomainError("leading coefficient of the zero polynomial");
    return c_.back();
  }
  bool is_monic() const { return !c_.empty() && ring_.is_one(c_.back()); }
  std::size_t term_count() const {
    return static_cast<std::size_t>(std::count_if(c_.begin(), c_.end(), [&](const auto& x) { return !ring_.is_zero(x); }));
  }

  UniPoly& operator+=(const UniPoly& o) {
    check(o);
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), ring_.zero());
    for (std::size_t i = 0; i < o.c_.size(); ++i) ring_.add_to(c_[i], o.c_[i]);
    detail::trim(ring_, c_);
    return *this;
  }
  UniPoly& operator-=(const UniPoly& o) {
    check(o);
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), ring_.zero());
    for (std::size_t i = 0; i < o.c_.size(); ++i) ring_.sub_to(c_[i], o.c_[i]);
    detail::trim(ring_, c_);
    return *this;
  }
  /// *this += a * b
  void add_product(const UniPoly& a, const UniPoly& b) {
    check(a);
    check(b);
    detail::accumulate_product(ring_, c_, a.coeffs(), detail::sparse_view(ring_, b.coeffs()), false);
    detail::trim(ring_, c_);
  }

  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    UniPoly out(a.ring_);
    out.add_product(a, b);
    return out;
  }
  UniPoly& operator*=(const UniPoly& o) { return *this = *this * o; }
  UniPoly operator-() const {
    UniPoly out = *this;
    for (auto& x : out.c_) x = ring_.neg(x);
    return out;
  }
  friend bool operator==(const UniPoly& a, const UniPoly& b) {
    if (a.c_.size() != b.c_.size()) return false;
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      if (!a.ring_.equal(a.c_[i], b.c_[i])) return false;
    return true;
  }

  UniPoly scaled(const value_type& s) const {
    std::vector<value_type> c;
    c.reserve(c_.size());
    for (const auto& x : c_) c.push_back(ring_.mul(x, s));
    return UniPoly(ring_, std::move(c));
  }
  UniPoly shifted(std::size_t k) const {
    if (c_.empty()) return *this;
    std::vector<value_type> c(k, ring_.zero());
    c.insert(c.end(), c_.begin(), c_.end());
    return UniPoly(ring_, std::move(c));
  }
  UniPoly derivative() const {
    std::vector<value_type> c;
    for (std::size_t i = 1; i < c_.size(); ++i) c.push_back(ring_.mul(c_[i], ring_.from_int(static_cast<long>(i))));
    return UniPoly(ring_, std::move(c));
  }
  value_type evaluate(const value_type& x) const {
    value_type acc = ring_.zero();
    for (std::size_t i = c_.size(); i-- > 0;) {
      acc = ring_.mul(acc, x);
      ring_.add_to(acc, c_[i]);
    }
    return acc;
  }
  /// p(g(c))
  UniPoly compose(const UniPoly& g) const {
    UniPoly acc(ring_);
    for (std::size_t i = c_.size(); i-- > 0;) {
      acc = acc * g;
      acc += constant(ring_, c_[i]);
    }
    return acc;
  }
  UniPoly pow(unsigned e) const {
    UniPoly result = constant(ring_, ring_.one());
    UniPoly base = *this;
    while (e > 0) {
      if (e & 1u) result *= base;
      e >>= 1u;
      if (e) base = base * base;
    }
    return result;
  }
  template <CoefficientRing R2, class F>
  UniPoly<R2> map(R2 target, F&& f) const {
    std::vector<typename R2::value_type> c;
    c.reserve(c_.size());
    for (const auto& x : c_) c.push_back(f(x));
    return UniPoly<R2>(std::move(target), std::move(c));
  }

 private:
  friend class BivarPoly<R>;
  template <CoefficientRing R2>
  friend std::optional<UniPoly<R2>> try_divide_exact(const UniPoly<R2>&, const UniPoly<R2>&);
  template <CoefficientRing R2>
  friend std::optional<BivarPoly<R2>> try_exact_div(const BivarPoly<R2>&, const BivarPoly<R2>&);

  void check(const UniPoly& o) const {
    if (!ring_.same_context(o.ring_)) throw ContextMismatch("polynomials over different rings: " + ring_.name() + " vs " + o.ring_.name());
  }

  R ring_;
  std::vector<value_type> c_;
};

/// num / den when the quotient exists in R[c]; std::nullopt otherwise.
template <CoefficientRing R>
std::optional<UniPoly<R>> try_divide_exact(const UniPoly<R>& num, const UniPoly<R>& den) {
  if (den.is_zero()) return std::nullopt;
  const R& ring = num.ring();
  if (num.is_zero()) return UniPoly<R>(ring);
  if (num.degree() < den.degree()) return std::nullopt;
  std::vector<typename R::value_type> rem(num.c_);
  const std::size_t dn = den.c_.size() - 1;
  std::vector<typename R::value_type> quot(rem.size() - dn, ring.zero());
  const auto& lc = den.c_.back();
  const bool unit = ring.is_one(lc);
  auto view = detail::sparse_view(ring, std::span(den.c_.data(), dn));
  for (std::size_t i = rem.size(); i-- > dn;) {
    if (ring.is_zero(rem[i])) continue;
    typename R::value_type q;
    if (unit) {
      q = rem[i];
    } else {
      auto qq = ring.divide_exact(rem[i], lc);
      if (!qq) return std::nullopt;
      q = std::move(*qq);
    }
    for (std::size_t t = 0; t < view.index.size(); ++t) ring.submul(rem[i - dn + view.index[t]], q, *view.value[t]);
    quot[i - dn] = std::move(q);
  }
  for (std::size_t i = 0; i < dn; ++i)
    if (!ring.is_zero(rem[i])) return std::nullopt;
  return UniPoly<R>(ring, std::move(quot));
}

template <CoefficientRing R>
UniPoly<R> divide_exact(const UniPoly<R>& num, const UniPoly<R>& den) {
  auto q = try_divide_exact(num, den);
  if (!q) throw NonExactDivision("univariate division is not exact");
  return std::move(*q);
}

/// Quotient and remainder over a field.
template <CoefficientField R>
std::pair<UniPoly<R>, UniPoly<R>> divmod(const UniPoly<R>& a, const UniPoly<R>& b) {
  if (b.is_zero()) throw DomainError("division by the zero polynomial");
  const R& ring = a.ring();
  std::vector<typename R::value_type> rem(a.coeffs().begin(), a.coeffs().end());
  const std::size_t db = b.size() - 1;
  if (rem.size() <= db) return {UniPoly<R>(ring), a};
  std::vector<typename R::value_type> quot(rem.size() - db, ring.zero());
  const auto lc_inv = ring.inv(b.leading());
  const auto bc = b.coeffs();
  for (std::size_t i = rem.size(); i-- > db;) {
    if (ring.is_zero(rem[i])) continue;
    auto q = ring.mul(rem[i], lc_inv);
    for (std::size_t j = 0; j < db; ++j) ring.submul(rem[i - db + j], q, bc[j]);
    rem[i] = ring.zero();
    quot[i - db] = std::move(q);
  }
  rem.resize(db, ring.zero());
  return {UniPoly<R>(ring, std::move(quot)), UniPoly<R>(ring, std::move(rem))};
}

template <CoefficientField R>
UniPoly<R> make_monic(const UniPoly<R>& a) {
  if (a.is_zero()) return a;
  return a.scaled(a.ring().inv(a.leading()));
}

/// Monic gcd by the Euclidean algorithm; gcd(0, 0) = 0.
template <CoefficientField R>
UniPoly<R> gcd(UniPoly<R> a, UniPoly<R> b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = make_monic(r);
  }
  return make_monic(a);
}

/// True iff gcd(P, P') = 1.  Meaningful when the characteristic is 0 or
/// exceeds deg P.
template <CoefficientField R>
bool is_squarefree(const UniPoly<R>& p) {
  if (p.degree() <= 0) return true;
  return gcd(p, p.derivative()).degree() == 0;
}

}  // namespace dynatomic
