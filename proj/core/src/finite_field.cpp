#include "dynatomic/finite_field.hpp"

#include "dynatomic/number_theory.hpp"
#include "dynatomic/rings.hpp"

namespace dynatomic {
namespace {

using Poly = std::vector<std::int64_t>;  // over F_p, constant term first

std::int64_t mod(std::int64_t a, std::int64_t p) { return ((a % p) + p) % p; }

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo a monic b.
Poly poly_rem(Poly a, const Poly& b, std::int64_t p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  while (a.size() > db) {
    const std::int64_t lead = a.back();
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) a[shift + i] = mod(a[shift + i] - lead * b[i], p);
    trim(a);
  }
  return a;
}

Poly decode(std::uint32_t v, std::int64_t p, std::int64_t k) {
  Poly out(static_cast<std::size_t>(k), 0);
  for (std::int64_t i = 0; i < k; ++i) {
    out[static_cast<std::size_t>(i)] = v % p;
    v = static_cast<std::uint32_t>(v / p);
  }
  return out;
}

std::uint32_t encode(const Poly& a, std::int64_t p) {
  std::int64_t v = 0;
  for (std::size_t i = a.size(); i-- > 0;) v = v * p + a[i];
  return static_cast<std::uint32_t>(v);
}

bool is_irreducible(const Poly& f, std::int64_t p) {
  const std::int64_t k = static_cast<std::int64_t>(f.size()) - 1;
  // trial division by every monic polynomial of degree 1..k/2
  for (std::int64_t deg = 1; 2 * deg <= k; ++deg) {
    const std::int64_t count = checked_pow(p, static_cast<std::uint64_t>(deg));
    for (std::int64_t idx = 0; idx < count; ++idx) {
      Poly g = decode(static_cast<std::uint32_t>(idx), p, deg);
      g.push_back(1);
      if (poly_rem(f, g, p).empty()) return false;
    }
  }
  return true;
}

// Lexicographically smallest monic irreducible of degree k, comparing
// coefficients from x^(k-1) down to the constant term.
Poly smallest_irreducible(std::int64_t p, std::int64_t k) {
  const std::int64_t count = checked_pow(p, static_cast<std::uint64_t>(k));
  for (std::int64_t idx = 0; idx < count; ++idx) {
    Poly f = decode(static_cast<std::uint32_t>(idx), p, k);
    f.push_back(1);
    if (is_irreducible(f, p)) return f;
  }
  throw Error("no irreducible polynomial found");  // unreachable for prime p
}

}  // namespace

FiniteField FiniteField::build(std::int64_t p, std::int64_t d) {
  if (!is_prime(p)) throw DomainError("build_fq: p = " + std::to_string(p) + " is not prime");
  if (d < 2) throw DomainError("build_fq: d must be >= 2");
  if (d % p == 0)
    throw DomainError("build_fq: wild characteristic, p = " + std::to_string(p) + " divides d = " +
                      std::to_string(d));
  auto t = std::make_shared<Tables>();
  t->p = p;
  t->d = d;
  t->k = multiplicative_order(p, d);
  mpz_class q = ipow(p, static_cast<std::uint64_t>(t->k));
  if (q > kMaxOrder) throw CapExceeded("build_fq: field order " + q.get_str() + " exceeds table limit");
  t->q = q.get_si();
  t->modulus = smallest_irreducible(p, t->k);

  const std::int64_t n = t->q - 1;
  auto slow_mul = [&](std::uint32_t a, std::uint32_t b) {
    Poly x = decode(a, p, t->k), y = decode(b, p, t->k);
    Poly prod(x.size() + y.size(), 0);
    for (std::size_t i = 0; i < x.size(); ++i)
      for (std::size_t j = 0; j < y.size(); ++j) prod[i + j] = mod(prod[i + j] + x[i] * y[j], p);
    Poly r = poly_rem(prod, t->modulus, p);
    r.resize(static_cast<std::size_t>(t->k), 0);
    return encode(r, p);
  };
  auto slow_pow = [&](std::uint32_t a, std::int64_t e) {
    std::uint32_t r = 1;
    while (e > 0) {
      if (e & 1) r = slow_mul(r, a);
      a = slow_mul(a, a);
      e >>= 1;
    }
    return r;
  };

  // smallest primitive element by encoding
  const auto order_factors = n > 1 ? factorize(n) : std::vector<std::pair<std::int64_t, int>>{};
  std::uint32_t g = 1;
  for (std::uint32_t cand = 1; cand < static_cast<std::uint32_t>(t->q); ++cand) {
    bool primitive = true;
    for (auto [r, e] : order_factors) {
      if (slow_pow(cand, n / r) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      g = cand;
      break;
    }
  }
  t->generator = {g};

  t->exp.resize(static_cast<std::size_t>(2 * n));
  t->log.assign(static_cast<std::size_t>(t->q), 0);
  std::uint32_t cur = 1;
  for (std::int64_t i = 0; i < n; ++i) {
    t->exp[static_cast<std::size_t>(i)] = cur;
    t->exp[static_cast<std::size_t>(i + n)] = cur;
    t->log[cur] = i;
    cur = slow_mul(cur, g);
  }
  t->zech.assign(static_cast<std::size_t>(n), -1);
  for (std::int64_t i = 0; i < n; ++i) {
    Poly x = decode(t->exp[static_cast<std::size_t>(i)], p, t->k);
    x[0] = mod(x[0] + 1, p);
    const std::uint32_t s = encode(x, p);
    t->zech[static_cast<std::size_t>(i)] = (s == 0) ? -1 : t->log[s];
  }
  t->log_minus_one = (p == 2) ? 0 : n / 2;
  t->gen_zeta = {t->exp[static_cast<std::size_t>(n / d)]};
  return FiniteField(std::move(t));
}

FiniteField::Elem FiniteField::pow(Elem a, std::int64_t e) const {
  const std::int64_t n = t_->q - 1;
  if (a.v == 0) {
    if (e < 0) throw DomainError("negative power of zero");
    return e == 0 ? one() : zero();
  }
  std::int64_t l = (t_->log[a.v] * (((e % n) + n) % n)) % n;
  return {t_->exp[static_cast<std::size_t>(l)]};
}

FiniteField::Elem FiniteField::zeta_power(long j) const { return pow(t_->gen_zeta, j); }

std::vector<std::int64_t> FiniteField::coords(Elem a) const { return decode(a.v, t_->p, t_->k); }

FiniteField::Elem FiniteField::from_coords(std::span<const std::int64_t> c) const {
  if (static_cast<std::int64_t>(c.size()) != t_->k)
    throw DomainError("F_q element needs " + std::to_string(t_->k) + " coordinates");
  Poly a;
  for (auto x : c) a.push_back(mod(x, t_->p));
  return {encode(a, t_->p)};
}

std::vector<FiniteField::Elem> FiniteField::elements() const {
  std::vector<Elem> out;
  out.reserve(static_cast<std::size_t>(t_->q));
  for (std::int64_t v = 0; v < t_->q; ++v) out.push_back({static_cast<std::uint32_t>(v)});
  return out;
}

std::vector<std::string> FiniteField::format(Elem a) const {
  std::vector<std::string> out;
  for (auto x : coords(a)) out.push_back(std::to_string(x));
  return out;
}

FiniteField::Elem FiniteField::parse(std::span<const std::string> c) const {
  if (static_cast<std::int64_t>(c.size()) != t_->k)
    throw DomainError("F_q coefficient needs " + std::to_string(t_->k) + " coordinates");
  Poly a;
  for (const auto& s : c) {
    mpz_class x = parse_integer(s);
    if (x < 0 || x >= t_->p) throw DomainError("F_p residue out of range: " + s);
    a.push_back(x.get_si());
  }
  return {encode(a, t_->p)};
}

std::string FiniteField::name() const {
  return "GF(" + std::to_string(t_->p) + "^" + std::to_string(t_->k) + ")";
}

}  // namespace dynatomic
