#pragma once

// F_q = F_p(mu_d): the smallest extension of F_p containing the d-th roots of
// unity.  Elements are encoded as integers v = sum a_i p^i, where a_i is the
// coefficient of x^i in F_p[x]/(modulus).  Multiplication goes through
// discrete log tables and addition through Zech logarithms.

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dynatomic/error.hpp"

namespace dynatomic {

class FiniteField {
 public:
  struct Elem {
    std::uint32_t v = 0;
    friend bool operator==(Elem, Elem) = default;
    friend auto operator<=>(Elem, Elem) = default;
  };
  using value_type = Elem;

  /// Largest field order the table representation accepts.
  static constexpr std::int64_t kMaxOrder = std::int64_t{1} << 22;

  /// build_fq: F_p(mu_d).  Rejects composite p and p | d.
  static FiniteField build(std::int64_t p, std::int64_t d);

  std::int64_t p() const { return t_->p; }
  std::int64_t k() const { return t_->k; }
  std::int64_t q() const { return t_->q; }
  long root_order() const { return static_cast<long>(t_->d); }

  /// Monic irreducible modulus of degree k, constant term first.
  const std::vector<std::int64_t>& modulus() const { return t_->modulus; }
  Elem gen_zeta() const { return t_->gen_zeta; }
  Elem zeta_power(long j) const;
  Elem primitive_element() const { return t_->generator; }

  std::vector<std::int64_t> coords(Elem a) const;
  Elem from_coords(std::span<const std::int64_t> coords) const;
  /// All q elements in encoding order.
  std::vector<Elem> elements() const;

  Elem zero() const { return {0}; }
  Elem one() const { return {1}; }
  Elem from_int(long n) const {
    const auto p = t_->p;
    return {static_cast<std::uint32_t>(((n % p) + p) % p)};
  }
  bool is_zero(Elem a) const { return a.v == 0; }
  bool is_one(Elem a) const { return a.v == 1; }
  bool equal(Elem a, Elem b) const { return a.v == b.v; }

  Elem add(Elem a, Elem b) const {
    if (a.v == 0) return b;
    if (b.v == 0) return a;
    const std::int64_t la = t_->log[a.v];
    std::int64_t n = t_->log[b.v] - la;
    if (n < 0) n += t_->q - 1;
    const std::int64_t z = t_->zech[static_cast<std::size_t>(n)];
    if (z < 0) return {0};
    return {t_->exp[static_cast<std::size_t>(la + z)]};
  }
  Elem neg(Elem a) const {
    if (a.v == 0 || t_->p == 2) return a;
    return {t_->exp[static_cast<std::size_t>(t_->log[a.v] + t_->log_minus_one)]};
  }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem mul(Elem a, Elem b) const {
    if (a.v == 0 || b.v == 0) return {0};
    return {t_->exp[static_cast<std::size_t>(t_->log[a.v] + t_->log[b.v])]};
  }
  Elem inv(Elem a) const {
    if (a.v == 0) throw DomainError("inverse of zero in " + name());
    const std::int64_t l = t_->log[a.v];
    return {t_->exp[static_cast<std::size_t>(l == 0 ? 0 : t_->q - 1 - l)]};
  }
  Elem pow(Elem a, std::int64_t e) const;

  void add_to(Elem& acc, Elem a) const { acc = add(acc, a); }
  void sub_to(Elem& acc, Elem a) const { acc = sub(acc, a); }
  void addmul(Elem& acc, Elem a, Elem b) const { acc = add(acc, mul(a, b)); }
  void submul(Elem& acc, Elem a, Elem b) const { acc = sub(acc, mul(a, b)); }
  std::optional<Elem> divide_exact(Elem a, Elem b) const {
    if (b.v == 0) return std::nullopt;
    return mul(a, inv(b));
  }

  std::vector<std::string> format(Elem a) const;
  Elem parse(std::span<const std::string> coords) const;
  long characteristic() const { return static_cast<long>(t_->p); }
  std::string name() const;
  bool same_context(const FiniteField& o) const {
    return t_ == o.t_ || (t_->p == o.t_->p && t_->d == o.t_->d);
  }

 private:
  struct Tables {
    std::int64_t p = 0, d = 0, k = 0, q = 0;
    std::vector<std::int64_t> modulus;
    std::vector<std::uint32_t> exp;  // length 2(q-1): exp[i] = g^i
    std::vector<std::int64_t> log;   // log[0] unused
    std::vector<std::int64_t> zech;  // log(1 + g^n), -1 when 1 + g^n = 0
    std::int64_t log_minus_one = 0;
    Elem generator, gen_zeta;
  };
  explicit FiniteField(std::shared_ptr<const Tables> t) : t_(std::move(t)) {}

  std::shared_ptr<const Tables> t_;
};

inline FiniteField build_fq(std::int64_t p, std::int64_t d) { return FiniteField::build(p, d); }

}  // namespace dynatomic
