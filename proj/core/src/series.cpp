#include "dynatomic/series.hpp"

#include <algorithm>
#include <map>

#include "dynatomic/dynatomic.hpp"

namespace dynatomic {
namespace {

long padd(long a, long b) {
  if (a >= TSeries::kExact || b >= TSeries::kExact) return TSeries::kExact;
  return std::min(a + b, TSeries::kExact);
}

void check_same(const FiniteField& a, const FiniteField& b) {
  if (!a.same_context(b)) throw ContextMismatch("series over different fields: " + a.name() + " vs " + b.name());
}

}  // namespace

TSeries::TSeries(FiniteField F, long lo, std::vector<Elem> coeffs, long prec)
    : F_(std::move(F)), lo_(lo), c_(std::move(coeffs)), prec_(std::min(prec, kExact)) {
  normalize();
}

TSeries TSeries::monomial(FiniteField F, Elem a, long e, long prec) {
  return TSeries(std::move(F), e, {a}, prec);
}

void TSeries::normalize() {
  if (prec_ < kExact) {
    const long keep = prec_ - lo_;
    if (keep <= 0)
      c_.clear();
    else if (static_cast<long>(c_.size()) > keep)
      c_.resize(static_cast<std::size_t>(keep));
  }
  while (!c_.empty() && F_.is_zero(c_.back())) c_.pop_back();
  std::size_t lead = 0;
  while (lead < c_.size() && F_.is_zero(c_[lead])) ++lead;
  if (lead > 0) {
    c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(lead));
    lo_ += static_cast<long>(lead);
  }
  if (c_.empty()) lo_ = 0;
}

TSeries::Elem TSeries::coeff(long e) const {
  if (e >= prec_) throw PrecisionInsufficient("coefficient of T^" + std::to_string(e) + " is beyond precision " + std::to_string(prec_));
  if (c_.empty() || e < lo_ || e >= lo_ + static_cast<long>(c_.size())) return F_.zero();
  return c_[static_cast<std::size_t>(e - lo_)];
}

TSeries::Elem TSeries::leading() const {
  if (c_.empty()) throw PrecisionInsufficient("leading coefficient of a series that is zero to precision");
  return c_.front();
}

TSeries TSeries::truncated(long prec) const {
  TSeries out = *this;
  out.prec_ = std::min(prec_, prec);
  out.normalize();
  return out;
}

TSeries TSeries::shifted(long k) const {
  TSeries out = *this;
  if (!out.c_.empty()) out.lo_ += k;
  out.prec_ = prec_ >= kExact ? kExact : prec_ + k;
  return out;
}

TSeries TSeries::scaled(Elem s) const {
  if (F_.is_zero(s)) return TSeries(F_, kExact);
  TSeries out = *this;
  for (auto& x : out.c_) x = F_.mul(x, s);
  return out;
}

TSeries TSeries::substitute_scale(Elem s) const {
  if (F_.is_zero(s)) throw DomainError("T -> 0 T is not an automorphism");
  TSeries out = *this;
  for (std::size_t i = 0; i < out.c_.size(); ++i) out.c_[i] = F_.mul(out.c_[i], F_.pow(s, lo_ + static_cast<long>(i)));
  return out;
}

TSeries TSeries::inverse(long max_prec) const {
  if (c_.empty()) throw PrecisionInsufficient("inverting a series indistinguishable from 0");
  const long v = lo_;
  const Elem a0_inv = F_.inv(c_[0]);
  if (is_exact() && c_.size() == 1) return monomial(F_, a0_inv, -v);
  const long P = is_exact() ? max_prec : std::min(prec_ - 2 * v, max_prec);
  if (P >= kExact) throw DomainError("inverse of a non-monomial exact series needs a precision cap");
  const long N = P + v;
  if (N <= 0) return TSeries(F_, P);
  std::vector<Elem> u(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) u[i] = F_.mul(c_[i], a0_inv);
  std::vector<Elem> b(static_cast<std::size_t>(N), F_.zero());
  b[0] = F_.one();
  for (long k = 1; k < N; ++k) {
    Elem acc = F_.zero();
    const long top = std::min<long>(k, static_cast<long>(u.size()) - 1);
    for (long i = 1; i <= top; ++i) F_.addmul(acc, u[static_cast<std::size_t>(i)], b[static_cast<std::size_t>(k - i)]);
    b[static_cast<std::size_t>(k)] = F_.neg(acc);
  }
  for (auto& x : b) x = F_.mul(x, a0_inv);
  return TSeries(F_, -v, std::move(b), P);
}

TSeries& TSeries::operator+=(const TSeries& o) {
  check_same(F_, o.F_);
  const long prec = std::min(prec_, o.prec_);
  if (o.c_.empty()) {
    prec_ = prec;
    normalize();
    return *this;
  }
  if (c_.empty()) {
    *this = TSeries(F_, o.lo_, o.c_, prec);
    return *this;
  }
  const long lo = std::min(lo_, o.lo_);
  const long hi = std::max(lo_ + static_cast<long>(c_.size()), o.lo_ + static_cast<long>(o.c_.size()));
  std::vector<Elem> out(static_cast<std::size_t>(hi - lo), F_.zero());
  for (std::size_t i = 0; i < c_.size(); ++i) out[static_cast<std::size_t>(lo_ - lo) + i] = c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) F_.add_to(out[static_cast<std::size_t>(o.lo_ - lo) + i], o.c_[i]);
  lo_ = lo;
  c_ = std::move(out);
  prec_ = prec;
  normalize();
  return *this;
}

TSeries& TSeries::operator-=(const TSeries& o) { return *this += -o; }

TSeries TSeries::operator-() const {
  TSeries out = *this;
  for (auto& x : out.c_) x = F_.neg(x);
  return out;
}

TSeries operator*(const TSeries& a, const TSeries& b) {
  check_same(a.F_, b.F_);
  const FiniteField& F = a.F_;
  const long prec = std::min(padd(a.prec_, b.order()), padd(b.prec_, a.order()));
  if (a.c_.empty() || b.c_.empty()) return TSeries(F, prec);
  const long lo = a.lo_ + b.lo_;
  long len = static_cast<long>(a.c_.size() + b.c_.size()) - 1;
  if (prec < TSeries::kExact) len = std::min(len, prec - lo);
  if (len <= 0) return TSeries(F, prec);
  std::vector<TSeries::Elem> out(static_cast<std::size_t>(len), F.zero());
  for (std::size_t i = 0; i < a.c_.size() && static_cast<long>(i) < len; ++i) {
    if (F.is_zero(a.c_[i])) continue;
    const std::size_t top = std::min(b.c_.size(), static_cast<std::size_t>(len) - i);
    for (std::size_t j = 0; j < top; ++j) F.addmul(out[i + j], a.c_[i], b.c_[j]);
  }
  return TSeries(F, lo, std::move(out), prec);
}

TSeries TSeries::pow(unsigned e) const {
  TSeries result = one(F_);
  TSeries base = *this;
  while (e > 0) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e) base = base * base;
  }
  return result;
}

bool operator==(const TSeries& a, const TSeries& b) {
  return a.F_.same_context(b.F_) && a.prec_ == b.prec_ && a.c_ == b.c_ && (a.c_.empty() || a.lo_ == b.lo_);
}

bool TSeries::agree(const TSeries& a, const TSeries& b, long through) { return (a - b).order() >= through; }

TSeries dth_root_unit(const TSeries& u, long d, TSeries::Elem root, long max_prec) {
  const FiniteField& F = u.field();
  if (u.is_zero() || u.order() != 0) throw DomainError("d-th root needs a series of T-order 0");
  const auto lc = u.leading();
  if (!F.equal(F.pow(root, d), lc)) throw DomainError("given root is not a d-th root of the leading coefficient");
  if (u.is_exact() && u.coeffs().size() == 1) return TSeries::monomial(F, root, 0);
  const long P = u.is_exact() ? max_prec : std::min(u.prec(), max_prec);
  if (P >= TSeries::kExact) throw DomainError("d-th root of a non-constant exact series needs a precision cap");
  if (P <= 0) return TSeries(F, P);

  const std::size_t N = static_cast<std::size_t>(P);
  const std::size_t D = static_cast<std::size_t>(d);
  // pw[j][i] = [T^i] g^j for j = 1..d, filled as the g_i become known
  std::vector<std::vector<TSeries::Elem>> pw(D + 1, std::vector<TSeries::Elem>(N, F.zero()));
  std::vector<TSeries::Elem> g0pow(D + 1);
  g0pow[0] = F.one();
  for (std::size_t j = 1; j <= D; ++j) {
    g0pow[j] = F.mul(g0pow[j - 1], root);
    pw[j][0] = g0pow[j];
  }
  const auto denom_inv = F.inv(F.mul(F.from_int(d), g0pow[D - 1]));
  std::vector<TSeries::Elem> A(D + 1);
  auto& g = pw[1];
  for (std::size_t k = 1; k < N; ++k) {
    A[1] = F.zero();
    for (std::size_t j = 2; j <= D; ++j) {
      auto acc = F.mul(A[j - 1], root);
      for (std::size_t i = 1; i < k; ++i) F.addmul(acc, pw[j - 1][i], g[k - i]);
      A[j] = acc;
    }
    const auto gk = F.mul(F.sub(u.coeff(static_cast<long>(k)), A[D]), denom_inv);
    g[k] = gk;
    for (std::size_t j = 2; j <= D; ++j)
      pw[j][k] = F.add(A[j], F.mul(F.mul(F.from_int(static_cast<long>(j)), g0pow[j - 1]), gk));
  }
  return TSeries(F, 0, g, P);
}

TSeries dth_root_unit(const TSeries& u, long d, long max_prec) {
  const FiniteField& F = u.field();
  const auto lc = u.leading();
  for (const auto& r : F.elements())
    if (!F.is_zero(r) && F.equal(F.pow(r, d), lc)) return dth_root_unit(u, d, r, max_prec);
  throw DomainError("leading coefficient has no " + std::to_string(d) + "-th root in " + F.name());
}

TSeries c_series(const FiniteField& F, long d) { return TSeries::monomial(F, F.neg(F.one()), -d); }

TSeries branch_apply(const FiniteField& F, long d, int symbol, const TSeries& z, long max_prec) {
  if (z.order() <= -d) throw DomainError("branch needs T-order(z) > -d");
  const TSeries u = TSeries::one(F) + z.shifted(d);
  // the shift by T^-1 costs one digit, so the root is taken one further
  const long root_prec = max_prec >= TSeries::kExact ? max_prec : max_prec + 1;
  const TSeries g = dth_root_unit(u, d, F.one(), root_prec);
  return g.shifted(-1).scaled(zeta_d_power(F, d, symbol));
}

TSeries forward_map(const FiniteField& F, long d, const TSeries& z) {
  return z.pow(static_cast<unsigned>(d)) + c_series(F, d);
}

BranchCode::BranchCode(long pre, long per, std::vector<int> syms) : preperiod(pre), period(per), symbols(std::move(syms)) {
  if (preperiod < 0 || period < 1) throw DomainError("branch code needs preperiod >= 0 and period >= 1");
  if (static_cast<long>(symbols.size()) != preperiod + period)
    throw DomainError("branch code needs preperiod + period symbols");
}

int BranchCode::at(long i) const {
  if (i < 1) throw DomainError("branch code positions start at 1");
  if (i <= preperiod + period) return symbols[static_cast<std::size_t>(i - 1)];
  return symbols[static_cast<std::size_t>(preperiod + (i - preperiod - 1) % period)];
}

std::string BranchCode::str() const {
  const bool digits = std::all_of(symbols.begin(), symbols.end(), [](int s) { return s < 10; });
  std::string out;
  for (std::size_t i = 0; i < symbols.size(); ++i) {
    if (static_cast<long>(i) == preperiod) out += '(';
    if (!digits && i > 0 && static_cast<long>(i) != preperiod) out += ',';
    out += std::to_string(symbols[i]);
  }
  out += ')';
  return out;
}

std::vector<BranchCode> BranchCode::for_preperiodic(long d, long n, long m) {
  if (m < 0 || n <= m) throw DomainError("codes for f^n - f^m need n > m >= 0");
  const std::int64_t total = checked_pow(d, static_cast<std::uint64_t>(n));
  std::vector<BranchCode> out;
  out.reserve(static_cast<std::size_t>(total));
  std::vector<int> s(static_cast<std::size_t>(n), 0);
  for (std::int64_t idx = 0; idx < total; ++idx) {
    std::int64_t v = idx;
    for (long i = n - 1; i >= 0; --i) {
      s[static_cast<std::size_t>(i)] = static_cast<int>(v % d);
      v /= d;
    }
    out.emplace_back(m, n - m, s);
  }
  return out;
}

TSeries coded_root(const FiniteField& F, long d, const BranchCode& code, long prec) {
  if (prec < 1) throw DomainError("coded root needs prec >= 1");
  // each branch deepens agreement by d - 1; the seed 0 is right to order -1
  const long k = ((prec + 1) * d + (d - 2)) / (d - 1) + code.preperiod + static_cast<long>(code.symbols.size());
  TSeries z(F, -1);
  for (long i = k; i >= 1; --i) z = branch_apply(F, d, code.at(i), z, prec).truncated(prec);
  return z;
}

std::vector<TSeries> coefficient_series(const BivarPoly<FiniteField>& P, long d) {
  const FiniteField& F = P.ring();
  std::vector<TSeries> out;
  for (const auto& row : P.rows()) {
    const auto c = row.coeffs();
    if (c.empty()) {
      out.emplace_back(F, TSeries::kExact);
      continue;
    }
    const long top = static_cast<long>(c.size()) - 1;
    std::vector<FiniteField::Elem> v(static_cast<std::size_t>(d * top + 1), F.zero());
    for (long j = 0; j <= top; ++j) {
      const auto a = c[static_cast<std::size_t>(j)];
      v[static_cast<std::size_t>(d * (top - j))] = (j % 2 == 0) ? a : F.neg(a);
    }
    out.emplace_back(F, -d * top, std::move(v), TSeries::kExact);
  }
  return out;
}

std::vector<TSeries> monic_from_roots(const FiniteField& F, const std::vector<const TSeries*>& roots) {
  std::vector<TSeries> cf{TSeries::one(F)};
  for (const TSeries* r : roots) {
    std::vector<TSeries> next(cf.size() + 1, TSeries(F, TSeries::kExact));
    for (std::size_t k = 0; k < cf.size(); ++k) {
      next[k + 1] += cf[k];
      next[k] -= *r * cf[k];
    }
    cf = std::move(next);
  }
  return cf;
}

SplittingReport verify_splitting(const FiniteField& F, long d, long n, long m, long prec, int max_escalations) {
  if (m < 0 || n <= m) throw DomainError("splitting needs n > m >= 0");
  if (prec < 3) throw DomainError("splitting needs prec >= 3");
  const auto fam = make_family(d, F);
  const auto f = detail::iterates(fam, n);
  const auto target = coefficient_series(f[static_cast<std::size_t>(n)] - f[static_cast<std::size_t>(m)], d);
  const auto codes = BranchCode::for_preperiodic(d, n, m);
  const long N = static_cast<long>(codes.size());

  SplittingReport rep;
  rep.d = d;
  rep.p = F.p();
  rep.q = F.q();
  rep.n = n;
  rep.m = m;
  rep.prec = prec;
  rep.expected_count = N;

  for (int attempt = 0; attempt <= max_escalations; ++attempt) {
    const long P = prec << attempt;
    const long W = P + N + n * (d - 1);
    std::vector<SplittingRoot> roots;
    roots.reserve(codes.size());
    for (const auto& code : codes) roots.push_back({code, coded_root(F, d, code, W), 0});

    bool separated = true;
    for (std::size_t i = 0; i < roots.size() && separated; ++i)
      for (std::size_t j = i + 1; j < roots.size(); ++j)
        if ((roots[i].series - roots[j].series).is_zero()) {
          separated = false;
          break;
        }
    if (!separated) continue;

    rep.escalations = attempt;
    rep.root_prec = W;
    rep.count = static_cast<long>(roots.size());
    rep.distinct_ok = true;
    rep.orders_ok = std::all_of(roots.begin(), roots.end(),
                                [](const SplittingRoot& r) { return !r.series.is_zero() && r.series.order() == -1; });

    rep.min_residual_order = TSeries::kExact;
    for (auto& r : roots) {
      TSeries x = r.series, at_m = r.series;
      for (long k = 1; k <= n; ++k) {
        x = forward_map(F, d, x);
        if (k == m) at_m = x;
      }
      r.residual_order = (x - at_m).order();
      rep.min_residual_order = std::min(rep.min_residual_order, r.residual_order);
    }
    rep.residual_ok = rep.min_residual_order >= prec - 2;

    std::vector<const TSeries*> ptrs;
    for (const auto& r : roots) ptrs.push_back(&r.series);
    const auto prod = monic_from_roots(F, ptrs);
    rep.reconstruction_ok = prod.size() == target.size();
    for (std::size_t k = 0; rep.reconstruction_ok && k < prod.size(); ++k)
      rep.reconstruction_ok = prod[k].prec() >= prec && (prod[k] - target[k]).order() >= prec;

    std::map<std::uint32_t, long> leading;
    for (const auto& r : roots)
      if (!r.series.is_zero()) ++leading[r.series.leading().v];
    const long each = N / d;
    rep.leading_ok = static_cast<long>(leading.size()) == d;
    for (const auto& [v, count] : leading)
      rep.leading_ok = rep.leading_ok && count == each && F.is_one(F.pow(FiniteField::Elem{v}, d));
    rep.roots = std::move(roots);
    return rep;
  }
  throw PrecisionInsufficient("coded roots not separated after " + std::to_string(max_escalations) + " escalations");
}

}  // namespace dynatomic
