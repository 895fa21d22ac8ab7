#pragma once

// Z[zeta_d] and Q(zeta_d), stored as coordinate vectors in the power basis
// 1, zeta, ..., zeta^(phi(d)-1) modulo the d-th cyclotomic polynomial.

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <type_traits>
#include <vector>

#include <gmpxx.h>

#include "dynatomic/error.hpp"
#include "dynatomic/number_theory.hpp"
#include "dynatomic/rings.hpp"

namespace dynatomic {

namespace detail {

inline void scalar_addmul(mpz_class& acc, const mpz_class& a, const mpz_class& b) {
  mpz_addmul(acc.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
}
inline void scalar_addmul(mpq_class& acc, const mpq_class& a, const mpq_class& b) { acc += a * b; }

inline void scalar_addmul_si(mpz_class& acc, const mpz_class& a, std::int64_t s) {
  if (s >= 0)
    mpz_addmul_ui(acc.get_mpz_t(), a.get_mpz_t(), static_cast<unsigned long>(s));
  else
    mpz_submul_ui(acc.get_mpz_t(), a.get_mpz_t(), static_cast<unsigned long>(-s));
}
inline void scalar_addmul_si(mpq_class& acc, const mpq_class& a, std::int64_t s) {
  acc += a * mpq_class(static_cast<long>(s));
}

inline bool scalar_is_zero(const mpz_class& a) { return sgn(a) == 0; }
inline bool scalar_is_zero(const mpq_class& a) { return sgn(a) == 0; }

// Exact inverse of an element of Q[x]/(modulus) by Gaussian elimination on the
// multiplication matrix.  Throws DomainError for zero.
std::vector<mpq_class> cyclotomic_inverse(const std::vector<mpq_class>& a,
                                          const std::vector<std::vector<std::int64_t>>& power_table,
                                          std::size_t phi);

}  // namespace detail

template <class Scalar>
class Cyclotomic {
  static_assert(std::is_same_v<Scalar, mpz_class> || std::is_same_v<Scalar, mpq_class>);

 public:
  using value_type = std::vector<Scalar>;
  using scalar_type = Scalar;

  /// Builds the context for the d-th cyclotomic ring (d >= 2).
  explicit Cyclotomic(long d) {
    if (d < 2) throw DomainError("cyclotomic ring needs d >= 2");
    auto data = std::make_shared<Data>();
    data->d = d;
    data->modulus = cyclotomic_polynomial(d);
    data->phi = data->modulus.size() - 1;
    const std::size_t n = data->phi;
    // powers[k] = x^k mod Phi_d for 0 <= k < max(d, 2n - 1)
    const std::size_t count = std::max<std::size_t>(static_cast<std::size_t>(d), 2 * n);
    std::vector<std::int64_t> cur(n, 0);
    cur[0] = 1;
    for (std::size_t k = 0; k < count; ++k) {
      data->powers.push_back(cur);
      std::vector<std::int64_t> next(n, 0);
      for (std::size_t i = 0; i + 1 < n; ++i) next[i + 1] = cur[i];
      const std::int64_t top = cur[n - 1];
      for (std::size_t i = 0; i < n; ++i) next[i] -= top * data->modulus[i];
      cur = std::move(next);
    }
    data_ = std::move(data);
  }

  long root_order() const { return data_->d; }
  std::size_t dimension() const { return data_->phi; }
  const std::vector<std::int64_t>& modulus() const { return data_->modulus; }

  value_type zeta() const { return zeta_power(1); }

  /// zeta^j for any integer j (negative exponents allowed).
  value_type zeta_power(long j) const {
    const long d = data_->d;
    const auto& row = data_->powers[static_cast<std::size_t>(((j % d) + d) % d)];
    value_type out(data_->phi);
    for (std::size_t i = 0; i < data_->phi; ++i) out[i] = Scalar(static_cast<long>(row[i]));
    return out;
  }

  /// mu_d - {1} as zeta^1, ..., zeta^(d-1), in that order.
  std::vector<value_type> nontrivial_roots() const {
    std::vector<value_type> out;
    for (long j = 1; j < data_->d; ++j) out.push_back(zeta_power(j));
    return out;
  }

  value_type from_scalar(Scalar s) const {
    value_type out(data_->phi);
    out[0] = std::move(s);
    return out;
  }

  value_type zero() const { return value_type(data_->phi); }
  value_type one() const { return from_scalar(Scalar(1)); }
  value_type from_int(long n) const { return from_scalar(Scalar(n)); }

  bool is_zero(const value_type& a) const {
    for (const auto& x : a)
      if (!detail::scalar_is_zero(x)) return false;
    return true;
  }
  bool is_one(const value_type& a) const {
    if (a[0] != 1) return false;
    for (std::size_t i = 1; i < a.size(); ++i)
      if (!detail::scalar_is_zero(a[i])) return false;
    return true;
  }
  bool equal(const value_type& a, const value_type& b) const { return a == b; }

  value_type add(const value_type& a, const value_type& b) const {
    value_type r = a;
    add_to(r, b);
    return r;
  }
  value_type sub(const value_type& a, const value_type& b) const {
    value_type r = a;
    sub_to(r, b);
    return r;
  }
  value_type neg(const value_type& a) const {
    value_type r = a;
    for (auto& x : r) x = -x;
    return r;
  }
  void add_to(value_type& acc, const value_type& a) const {
    for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += a[i];
  }
  void sub_to(value_type& acc, const value_type& a) const {
    for (std::size_t i = 0; i < acc.size(); ++i) acc[i] -= a[i];
  }
  value_type mul(const value_type& a, const value_type& b) const {
    value_type r = zero();
    accumulate_product(r, a, b, false);
    return r;
  }
  void addmul(value_type& acc, const value_type& a, const value_type& b) const { accumulate_product(acc, a, b, false); }
  void submul(value_type& acc, const value_type& a, const value_type& b) const { accumulate_product(acc, a, b, true); }

  value_type inv(const value_type& a) const
    requires std::is_same_v<Scalar, mpq_class>
  {
    return detail::cyclotomic_inverse(a, data_->powers, data_->phi);
  }

  std::optional<value_type> divide_exact(const value_type& a, const value_type& b) const {
    if (is_zero(b)) return std::nullopt;
    if (is_one(b)) return a;
    if constexpr (std::is_same_v<Scalar, mpq_class>) {
      return mul(a, inv(b));
    } else {
      std::vector<mpq_class> bq(b.begin(), b.end());
      auto binv = detail::cyclotomic_inverse(bq, data_->powers, data_->phi);
      Cyclotomic<mpq_class> field(data_->d);
      auto q = field.mul(std::vector<mpq_class>(a.begin(), a.end()), binv);
      value_type out(data_->phi);
      for (std::size_t i = 0; i < q.size(); ++i) {
        if (q[i].get_den() != 1) return std::nullopt;
        out[i] = q[i].get_num();
      }
      return out;
    }
  }

  std::vector<std::string> format(const value_type& a) const {
    std::vector<std::string> out;
    out.reserve(a.size());
    for (const auto& x : a) out.push_back(x.get_str());
    return out;
  }
  value_type parse(std::span<const std::string> coords) const {
    if (coords.size() != data_->phi)
      throw DomainError("cyclotomic coefficient needs " + std::to_string(data_->phi) + " coordinates");
    value_type out(data_->phi);
    for (std::size_t i = 0; i < coords.size(); ++i) {
      if constexpr (std::is_same_v<Scalar, mpz_class>)
        out[i] = parse_integer(coords[i]);
      else
        out[i] = parse_rational(coords[i]);
    }
    return out;
  }

  long characteristic() const { return 0; }
  std::string name() const {
    const std::string d = std::to_string(data_->d);
    return std::is_same_v<Scalar, mpz_class> ? "Z[zeta_" + d + "]" : "Q(zeta_" + d + ")";
  }
  bool same_context(const Cyclotomic& o) const { return data_ == o.data_ || data_->d == o.data_->d; }

 private:
  struct Data {
    long d = 0;
    std::size_t phi = 0;
    std::vector<std::int64_t> modulus;
    std::vector<std::vector<std::int64_t>> powers;
  };

  void accumulate_product(value_type& acc, const value_type& a, const value_type& b, bool subtract) const {
    const std::size_t n = data_->phi;
    if (n == 1) {
      if constexpr (std::is_same_v<Scalar, mpz_class>) {
        if (subtract)
          mpz_submul(acc[0].get_mpz_t(), a[0].get_mpz_t(), b[0].get_mpz_t());
        else
          mpz_addmul(acc[0].get_mpz_t(), a[0].get_mpz_t(), b[0].get_mpz_t());
      } else {
        if (subtract)
          acc[0] -= a[0] * b[0];
        else
          acc[0] += a[0] * b[0];
      }
      return;
    }
    thread_local std::vector<Scalar> prod;
    thread_local std::vector<char> used;
    prod.resize(2 * n - 1);
    used.assign(2 * n - 1, 0);
    for (auto& x : prod) x = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (detail::scalar_is_zero(a[i])) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (detail::scalar_is_zero(b[j])) continue;
        detail::scalar_addmul(prod[i + j], a[i], b[j]);
        used[i + j] = 1;
      }
    }
    const std::int64_t sign = subtract ? -1 : 1;
    for (std::size_t k = 0; k < 2 * n - 1; ++k) {
      if (!used[k]) continue;
      const auto& row = data_->powers[k];
      for (std::size_t i = 0; i < n; ++i)
        if (row[i] != 0) detail::scalar_addmul_si(acc[i], prod[k], sign * row[i]);
    }
  }

  std::shared_ptr<const Data> data_;
};

using CyclotomicIntegers = Cyclotomic<mpz_class>;
using CyclotomicField = Cyclotomic<mpq_class>;

/// build_cyclotomic: the context for Q(zeta_d).
inline CyclotomicField build_cyclotomic(long d) { return CyclotomicField(d); }

}  // namespace dynatomic
