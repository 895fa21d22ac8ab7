#pragma once

// Coefficient rings for the polynomial engine.
//
// A ring is a small copyable context object; its elements are plain values of
// R::value_type.  Polynomials store a copy of the context and call back into it
// for every coefficient operation, so the same polynomial code runs over Z, Q,
// Z[zeta_d], Q(zeta_d) and F_q.

#include <concepts>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "dynatomic/error.hpp"

namespace dynatomic {

template <class R>
concept CoefficientRing =
    std::copy_constructible<R> &&
    requires(const R& r, typename R::value_type& acc, const typename R::value_type& a, long n,
             std::span<const std::string> coords) {
      { r.zero() } -> std::same_as<typename R::value_type>;
      { r.one() } -> std::same_as<typename R::value_type>;
      { r.from_int(n) } -> std::same_as<typename R::value_type>;
      { r.is_zero(a) } -> std::same_as<bool>;
      { r.is_one(a) } -> std::same_as<bool>;
      { r.equal(a, a) } -> std::same_as<bool>;
      { r.add(a, a) } -> std::same_as<typename R::value_type>;
      { r.sub(a, a) } -> std::same_as<typename R::value_type>;
      { r.mul(a, a) } -> std::same_as<typename R::value_type>;
      { r.neg(a) } -> std::same_as<typename R::value_type>;
      r.add_to(acc, a);
      r.sub_to(acc, a);
      r.addmul(acc, a, a);
      r.submul(acc, a, a);
      { r.divide_exact(a, a) } -> std::same_as<std::optional<typename R::value_type>>;
      { r.format(a) } -> std::same_as<std::vector<std::string>>;
      { r.parse(coords) } -> std::same_as<typename R::value_type>;
      { r.characteristic() } -> std::same_as<long>;
      { r.name() } -> std::same_as<std::string>;
      { r.same_context(r) } -> std::same_as<bool>;
    };

template <class R>
concept CoefficientField = CoefficientRing<R> && requires(const R& r, const typename R::value_type& a) {
  { r.inv(a) } -> std::same_as<typename R::value_type>;
};

/// Rings containing a fixed primitive d-th root of unity zeta.
template <class R>
concept HasRootsOfUnity = CoefficientRing<R> && requires(const R& r, long j) {
  { r.root_order() } -> std::same_as<long>;
  { r.zeta_power(j) } -> std::same_as<typename R::value_type>;
};

/// The integers, backed by GMP.
class IntegerRing {
 public:
  using value_type = mpz_class;

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type from_int(long n) const { return n; }
  bool is_zero(const value_type& a) const { return sgn(a) == 0; }
  bool is_one(const value_type& a) const { return a == 1; }
  bool equal(const value_type& a, const value_type& b) const { return a == b; }
  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type neg(const value_type& a) const { return -a; }
  void add_to(value_type& acc, const value_type& a) const { acc += a; }
  void sub_to(value_type& acc, const value_type& a) const { acc -= a; }
  void addmul(value_type& acc, const value_type& a, const value_type& b) const {
    mpz_addmul(acc.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  }
  void submul(value_type& acc, const value_type& a, const value_type& b) const {
    mpz_submul(acc.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  }
  std::optional<value_type> divide_exact(const value_type& a, const value_type& b) const {
    if (sgn(b) == 0 || !mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t())) return std::nullopt;
    value_type q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
  }
  std::vector<std::string> format(const value_type& a) const { return {a.get_str()}; }
  value_type parse(std::span<const std::string> coords) const;
  long characteristic() const { return 0; }
  std::string name() const { return "Z"; }
  bool same_context(const IntegerRing&) const { return true; }
};

/// The rationals, backed by GMP; values are kept in lowest terms by mpq_class.
class RationalField {
 public:
  using value_type = mpq_class;

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type from_int(long n) const { return n; }
  bool is_zero(const value_type& a) const { return sgn(a) == 0; }
  bool is_one(const value_type& a) const { return a == 1; }
  bool equal(const value_type& a, const value_type& b) const { return a == b; }
  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type neg(const value_type& a) const { return -a; }
  void add_to(value_type& acc, const value_type& a) const { acc += a; }
  void sub_to(value_type& acc, const value_type& a) const { acc -= a; }
  void addmul(value_type& acc, const value_type& a, const value_type& b) const { acc += a * b; }
  void submul(value_type& acc, const value_type& a, const value_type& b) const { acc -= a * b; }
  value_type inv(const value_type& a) const {
    if (sgn(a) == 0) throw DomainError("inverse of zero");
    return 1 / a;
  }
  std::optional<value_type> divide_exact(const value_type& a, const value_type& b) const {
    if (sgn(b) == 0) return std::nullopt;
    return value_type(a / b);
  }
  std::vector<std::string> format(const value_type& a) const { return {a.get_str()}; }
  value_type parse(std::span<const std::string> coords) const;
  long characteristic() const { return 0; }
  std::string name() const { return "Q"; }
  bool same_context(const RationalField&) const { return true; }
};

/// Parses a decimal integer, rejecting anything mpz would silently accept
/// (leading '+', whitespace, other bases).
mpz_class parse_integer(const std::string& s);
/// Parses "a" or "a/b" in lowest terms with b > 0 (canonical form only).
mpq_class parse_rational(const std::string& s);

}  // namespace dynatomic
