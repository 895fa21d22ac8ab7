#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "dynatomic/bounds.hpp"
#include "dynatomic/dynatomic.hpp"
#include "dynatomic/factor.hpp"
#include "dynatomic/lemmas.hpp"
#include "dynatomic/parallel.hpp"
#include "dynatomic/poly_text.hpp"
#include "dynatomic/series.hpp"
#include "settings.hpp"
#include "suite.hpp"

namespace dynatomic::cli {
namespace {

using Json = nlohmann::ordered_json;

struct Args {
  long d = 2, n = 1, m = 0, p = 0, e = 1;
  std::optional<long> j;
  long prec = 32;
  unsigned threads = 0;
  bool json = false;
  std::string config;
  bool quick = false;
  std::int64_t cap = kDefaultScanCap;
  std::string g1 = "0", g2 = "0", d1 = "1", d2 = "1";
  std::optional<std::string> genus;
  std::string gamma1 = "1";
  long m_max = 2;
  std::vector<std::string> genera;
  long q0 = 2, D = 1;
  bool force_exact = false;
};

Json header(const std::string& command) {
  Json j;
  j["schema"] = "v1";
  j["command"] = command;
  return j;
}

std::string join_coords(const FiniteField& F, FiniteField::Elem a) {
  const auto c = F.format(a);
  if (c.size() == 1) return c[0];
  return format_coefficient(F, a);
}

class Runner {
 public:
  Runner(const Args& a, const Settings& s, std::ostream& out) : a_(a), s_(s), out_(out) {}

  template <CoefficientRing R>
  int emit_poly(const std::string& command, const BivarPoly<R>& P, Json meta) {
    if (s_.json) {
      Json j = header(command);
      for (auto& [k, v] : meta.items()) j[k] = v;
      j["ring"] = P.ring().name();
      j["deg_z"] = P.deg_z();
      j["deg_c"] = P.deg_c();
      j["terms"] = P.term_count();
      j["poly"] = to_text(P);
      out_ << j.dump(2) << "\n";
    } else {
      out_ << to_pretty(P) << "\n";
    }
    return kOk;
  }

  int phi_cmd() {
    Json meta{{"d", a_.d}, {"n", a_.n}};
    if (a_.p) {
      const auto F = FiniteField::build(a_.p, a_.d);
      return emit_poly("phi", phi(make_family(a_.d, F, s_.max_deg_z), a_.n), meta);
    }
    return emit_poly("phi", phi(make_family(a_.d, IntegerRing{}, s_.max_deg_z), a_.n), meta);
  }

  int phimn_cmd() {
    // m = 0 is the periodic curve Y1(n)
    if (a_.m == 0) return phi_cmd();
    Json meta{{"d", a_.d}, {"m", a_.m}, {"n", a_.n}};
    if (a_.p) {
      const auto F = FiniteField::build(a_.p, a_.d);
      return emit_poly("phimn", phi_mn(make_family(a_.d, F, s_.max_deg_z), a_.m, a_.n), meta);
    }
    return emit_poly("phimn", phi_mn(make_family(a_.d, IntegerRing{}, s_.max_deg_z), a_.m, a_.n), meta);
  }

  int component_cmd() {
    const long j = a_.j.value_or(1);
    Json meta{{"d", a_.d}, {"m", a_.m}, {"n", a_.n}, {"zeta_index", j}};
    const CyclotomicIntegers K(a_.d);
    const auto C = zeta_component(make_family(a_.d, K, s_.max_deg_z), a_.m, a_.n, j);
    if (a_.p) return emit_poly("component", reduce(FiniteField::build(a_.p, a_.d), C), meta);
    return emit_poly("component", C, meta);
  }

  int check_line(const std::string& name, const std::string& params, bool ok, Json detail = Json::object()) {
    if (s_.json) {
      Json j = header("verify " + name);
      j["params"] = params;
      j["ok"] = ok;
      for (auto& [k, v] : detail.items()) j[k] = v;
      out_ << j.dump(2) << "\n";
    } else {
      out_ << (ok ? "PASS " : "FAIL ") << name << " " << params;
      for (auto& [k, v] : detail.items()) {
        if (v.is_array() || v.is_object()) continue;
        out_ << " " << k << "=" << (v.is_string() ? v.get<std::string>() : v.dump());
      }
      out_ << "\n";
    }
    return ok ? kOk : kCheckFailed;
  }

  std::string dn() const { return "d=" + std::to_string(a_.d) + " n=" + std::to_string(a_.n); }
  std::string dmn() const { return "d=" + std::to_string(a_.d) + " m=" + std::to_string(a_.m) + " n=" + std::to_string(a_.n); }

  int verify_product() {
    return check_line("product", dn(), check_product_identity(make_family(a_.d, IntegerRing{}, s_.max_deg_z), a_.n));
  }

  int verify_degree() {
    const auto D1 = deg_D1(a_.d, a_.n);
    long deg;
    if (checked_pow(a_.d, static_cast<std::uint64_t>(a_.n)) <= 1024) {
      deg = phi(make_family(a_.d, IntegerRing{}, s_.max_deg_z), a_.n).deg_z();
    } else {
      const auto F = FiniteField::build(10007, 2);
      deg = phi_at_c(F, a_.d, a_.n, F.from_int(3)).degree();
    }
    Json detail{{"deg_z", deg}, {"D1", D1}};
    if (D1 % a_.n == 0) detail["D0"] = D1 / a_.n;
    return check_line("degree", dn(), deg == D1, detail);
  }

  int verify_zeta() {
    ZetaCheckOptions opt;
    opt.direct_budget = s_.direct_budget;
    opt.max_deg_z = s_.max_deg_z;
    const auto r = check_zeta_factorization(a_.d, a_.m, a_.n, opt);
    return check_line("zeta", dmn(), r.holds,
                      {{"route", r.route}, {"estimated_cost", r.estimated_cost}, {"spot_checks", r.spot_checks}});
  }

  int verify_simple_roots_cmd() {
    std::vector<long> js;
    if (a_.j)
      js.push_back(*a_.j);
    else
      for (long j = 1; j < a_.d; ++j) js.push_back(j);
    const auto reports = parallel_map(js.size(), s_.effective_threads(), [&](std::size_t i) {
      return verify_simple_roots(a_.d, a_.m, a_.n, js[i], a_.force_exact);
    });
    int rc = kOk;
    for (const auto& r : reports) {
      Json detail{{"degree", r.degree}, {"squarefree", r.squarefree}, {"method", r.method}};
      if (r.expected_degree) detail["expected_degree"] = *r.expected_degree;
      if (s_.json && r.degree <= 8) detail["poly"] = to_text(zero_fiber_poly(r.d, r.m, r.n, r.j));
      rc = std::max(rc, check_line("simple-roots", dmn() + " j=" + std::to_string(r.j), r.ok(), detail));
    }
    return rc;
  }

  int verify_fiber_factorization() {
    const auto r = dynatomic::verify_factorization2(a_.d, a_.m, a_.n);
    return check_line("fiber-factorization", dmn(), r.holds,
                      {{"divisibility_ok", r.divisibility_ok}, {"lhs_exact", r.lhs_exact}});
  }

  int verify_splitting() {
    const auto F = FiniteField::build(a_.p, a_.d);
    const auto r = dynatomic::verify_splitting(F, a_.d, a_.n, a_.m, s_.prec, s_.max_escalations);
    return check_line("splitting",
                      "d=" + std::to_string(a_.d) + " p=" + std::to_string(a_.p) + " q=" + std::to_string(r.q) +
                          " n=" + std::to_string(a_.n) + " m=" + std::to_string(a_.m),
                      r.ok(),
                      {{"count", r.count},
                       {"expected_count", r.expected_count},
                       {"orders_ok", r.orders_ok},
                       {"distinct_ok", r.distinct_ok},
                       {"residual_ok", r.residual_ok},
                       {"min_residual_order", r.min_residual_order},
                       {"reconstruction_ok", r.reconstruction_ok},
                       {"leading_ok", r.leading_ok},
                       {"prec", r.prec},
                       {"root_prec", r.root_prec},
                       {"escalations", r.escalations}});
  }

  int verify_reduction() {
    const auto F = FiniteField::build(a_.p, a_.d);
    const bool ok = reduce(F, phi(make_family(a_.d, IntegerRing{}, s_.max_deg_z), a_.n)) ==
                    phi(make_family(a_.d, F, s_.max_deg_z), a_.n);
    return check_line("reduction", dn() + " p=" + std::to_string(a_.p), ok);
  }

  int series_roots() {
    const auto F = FiniteField::build(a_.p, a_.d);
    const auto codes = BranchCode::for_preperiodic(a_.d, a_.n, a_.m);
    Json roots = Json::array();
    for (const auto& code : codes) {
      const auto r = coded_root(F, a_.d, code, s_.prec);
      TSeries x = r, at_m = r;
      for (long k = 1; k <= a_.n; ++k) {
        x = forward_map(F, a_.d, x);
        if (k == a_.m) at_m = x;
      }
      const long residual_order = (x - at_m).order();
      std::vector<std::string> coeffs;
      for (long e = r.order(); e < r.prec(); ++e) coeffs.push_back(join_coords(F, r.coeff(e)));
      if (s_.json) {
        roots.push_back({{"code", code.str()},
                         {"symbols", code.symbols},
                         {"preperiod", code.preperiod},
                         {"period", code.period},
                         {"lo", r.order()},
                         {"order", r.order()},
                         {"prec", r.prec()},
                         {"residual_order", residual_order},
                         {"coeffs", coeffs}});
      } else {
        out_ << code.str() << "  T^" << r.order() << ":";
        for (const auto& c : coeffs) out_ << " " << c;
        out_ << "  + O(T^" << r.prec() << ")  residual T^" << residual_order << "\n";
      }
    }
    if (s_.json) {
      Json j = header("series-roots");
      j["d"] = a_.d;
      j["p"] = a_.p;
      j["q"] = F.q();
      j["n"] = a_.n;
      j["m"] = a_.m;
      j["roots"] = roots;
      out_ << j.dump(2) << "\n";
    }
    return kOk;
  }

  int factor_fq() {
    const auto F = FiniteField::build(a_.p, a_.d);
    SubsetOptions opt{s_.prec, s_.max_orbits, s_.candidate_cap, s_.max_escalations};
    const auto r = subset_factor(F, a_.d, a_.n, a_.m, opt);
    if (s_.json) {
      Json j = header("factor-fq");
      j["d"] = r.d;
      j["p"] = r.p;
      j["q"] = r.q;
      j["n"] = r.n;
      j["m"] = r.m;
      j["prec"] = r.prec;
      j["root_prec"] = r.root_prec;
      j["escalations"] = r.escalations;
      j["candidates"] = r.candidates;
      j["degrees"] = r.degrees;
      Json factors = Json::array();
      for (const auto& f : r.factors) factors.push_back(to_text(f));
      j["factors"] = factors;
      Json partition = Json::array();
      for (const auto& orbit : r.orbit_partition) {
        Json o = Json::array();
        for (auto i : orbit) o.push_back(r.codes[i].str());
        partition.push_back(o);
      }
      j["orbit_partition"] = partition;
      j["factor_orbits"] = r.factor_orbits;
      j["product_ok"] = r.product_ok;
      j["gauss_ok"] = r.gauss_ok;
      out_ << j.dump(2) << "\n";
    } else {
      out_ << "f^" << r.n << " - f^" << r.m << " over " << F.name() << "(c): " << r.factors.size() << " factors, "
           << r.orbit_partition.size() << " local orbits\n";
      for (const auto& f : r.factors) out_ << "  " << to_pretty(f) << "\n";
    }
    return r.ok() ? kOk : kCheckFailed;
  }

  int scan() {
    const auto F = FiniteField::build(a_.p, a_.d);
    const auto r = bounded_degree_scan(F, a_.d, a_.e, a_.n, a_.m, a_.cap);
    if (s_.json) {
      Json j = header("scan");
      j["d"] = a_.d;
      j["p"] = a_.p;
      j["q"] = F.q();
      j["e"] = r.e;
      j["n"] = a_.n;
      j["m"] = a_.m;
      j["candidates"] = r.candidates;
      j["cap"] = r.cap;
      j["truncated"] = r.truncated;
      Json divs = Json::array();
      for (const auto& f : r.divisors) divs.push_back(to_text(f));
      j["divisors"] = divs;
      out_ << j.dump(2) << "\n";
    } else {
      out_ << r.divisors.size() << " divisors of degree " << r.e << " among " << r.candidates << " candidates\n";
      for (const auto& f : r.divisors) out_ << "  " << to_pretty(f) << "\n";
    }
    return kOk;
  }

  int emit_bound(const BoundReport& r) {
    if (s_.json) {
      Json j = header("bounds " + r.name);
      Json inputs = Json::object();
      for (const auto& [k, v] : r.inputs) inputs[k] = v;
      j["inputs"] = inputs;
      j["value"] = r.value.get_str();
      j["mode"] = to_string(r.mode);
      j["caveats"] = r.caveats;
      j["derivation"] = r.derivation;
      if (r.leading_coefficient) j["leading_coefficient"] = r.leading_coefficient->get_str();
      if (!r.sequence.empty()) {
        Json seq = Json::array();
        for (const auto& g : r.sequence) seq.push_back(g.get_str());
        j["sequence"] = seq;
      }
      out_ << j.dump(2) << "\n";
    } else {
      out_ << r.name << " = " << r.value.get_str() << " (" << to_string(r.mode) << ")\n";
      for (const auto& line : r.derivation) out_ << "  " << line << "\n";
      if (r.leading_coefficient) out_ << "  leading coefficient " << r.leading_coefficient->get_str() << "\n";
      for (const auto& c : r.caveats) out_ << "  caveat: " << c << "\n";
    }
    return kOk;
  }

  static mpz_class integer(const std::string& what, const std::string& v) {
    mpz_class z;
    if (z.set_str(v, 10) != 0) throw UsageError("bad integer '" + v + "' for " + what);
    return z;
  }

  int bounds_cs() {
    BoundReport r;
    r.name = "cs";
    r.inputs = {{"g1", a_.g1}, {"g2", a_.g2}, {"d1", a_.d1}, {"d2", a_.d2}};
    const mpz_class g1 = integer("g1", a_.g1), g2 = integer("g2", a_.g2), d1 = integer("d1", a_.d1),
                    d2 = integer("d2", a_.d2);
    if (g1 < 0 || g2 < 0 || d1 < 1 || d2 < 1) throw DomainError("castelnuovo-severi needs g >= 0 and degrees >= 1");
    r.value = castelnuovo_severi(g1, g2, d1, d2);
    return emit_bound(r);
  }

  int bounds_x0() {
    std::optional<mpz_class> g;
    if (a_.genus) g = integer("genus", *a_.genus);
    return emit_bound(x0_case_bounds(a_.d, a_.n, g));
  }

  int bounds_tower() {
    std::optional<std::vector<mpz_class>> genera;
    if (!a_.genera.empty()) {
      genera.emplace();
      for (const auto& g : a_.genera) genera->push_back(integer("genera", g));
    }
    return emit_bound(tower_recursion(a_.d, a_.n, integer("gamma1", a_.gamma1), a_.m_max, genera));
  }

  int bounds_count() {
    BoundReport r;
    r.name = "count";
    r.inputs = {{"d", std::to_string(a_.d)}, {"n", std::to_string(a_.n)}};
    r.value = preperiodic_count_bound(a_.d, a_.n);
    r.derivation = {"n d^n"};
    return emit_bound(r);
  }

  int bounds_constfield() {
    BoundReport r;
    r.name = "constfield";
    r.inputs = {{"q0", std::to_string(a_.q0)}, {"D", std::to_string(a_.D)}};
    r.value = finite_field_constant_bound(a_.q0, a_.D);
    r.derivation = {"q0^D"};
    return emit_bound(r);
  }

  int verify_all() {
    const auto grid = a_.quick ? quick_grid() : full_grid();
    const auto checks = build_suite(grid, s_);
    const auto results = run_suite(checks, s_.effective_threads());
    std::size_t passed = 0, failed = 0, exhausted = 0;
    Json list = Json::array();
    for (const auto& r : results) {
      const char* tag = r.result.outcome == Outcome::Pass ? "PASS" : r.result.outcome == Outcome::Fail ? "FAIL" : "EXHAUSTED";
      (r.result.outcome == Outcome::Pass ? passed : r.result.outcome == Outcome::Fail ? failed : exhausted)++;
      if (s_.json) {
        list.push_back({{"check", r.family}, {"params", r.params}, {"status", tag}, {"detail", r.result.detail}});
      } else {
        out_ << tag << " " << r.family << " " << r.params;
        if (!r.result.detail.empty()) out_ << " (" << r.result.detail << ")";
        out_ << "\n";
      }
    }
    if (s_.json) {
      Json j = header("verify-all");
      j["grid"] = a_.quick ? "quick" : "full";
      j["passed"] = passed;
      j["failed"] = failed;
      j["exhausted"] = exhausted;
      j["checks"] = list;
      out_ << j.dump(2) << "\n";
    } else {
      out_ << passed << " passed, " << failed << " failed, " << exhausted << " exhausted\n";
    }
    if (failed) return kCheckFailed;
    return exhausted ? kExhausted : kOk;
  }

 private:
  const Args& a_;
  const Settings& s_;
  std::ostream& out_;
};

void emit_error(std::ostream& out, std::ostream& err, bool json, const std::string& kind, const std::string& what) {
  if (json) {
    Json j;
    j["schema"] = "v1";
    j["error"] = kind;
    j["reason"] = what;
    out << j.dump(2) << "\n";
  }
  err << "error (" << kind << "): " << what << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const std::function<const char*(const char*)>& getenv_fn) {
  Args a;
  CLI::App app{"Dynatomic polynomials of z^d + c: exact identities, series at c = infinity, factoring over F_q(c), bounds",
               "dynatomic"};
  app.require_subcommand(1);
  app.fallthrough();
  auto* json_flag = app.add_flag("--json", a.json, "emit JSON");
  app.add_option("--config", a.config, "config file of key = value lines");
  auto* threads_opt = app.add_option("--threads", a.threads, "worker threads (0: all cores)");
  auto* prec_opt = app.add_option("--prec", a.prec, "series precision");

  auto d_opt = [&](CLI::App* s) { return s->add_option("--d", a.d, "degree of z^d + c")->check(CLI::Range(2L, 64L)); };
  auto n_opt = [&](CLI::App* s) { return s->add_option("--n", a.n, "period")->check(CLI::Range(1L, 64L)); };
  auto m_opt = [&](CLI::App* s, long lo) { return s->add_option("--m", a.m, "preperiod")->check(CLI::Range(lo, 64L)); };
  auto p_opt = [&](CLI::App* s) { return s->add_option("--p", a.p, "characteristic")->check(CLI::Range(2L, 1L << 22)); };

  auto* phi = app.add_subcommand("phi", "dynatomic polynomial Phi_n");
  d_opt(phi)->required();
  n_opt(phi)->required();
  p_opt(phi);
  auto* phimn = app.add_subcommand("phimn", "generalized dynatomic polynomial Phi_{m,n}");
  d_opt(phimn)->required();
  m_opt(phimn, 0)->required();
  n_opt(phimn)->required();
  p_opt(phimn);
  auto* component = app.add_subcommand("component", "zeta-component Phi_n(zeta^{-j} f^{m-1}(z), c)");
  d_opt(component)->required();
  m_opt(component, 1)->required();
  n_opt(component)->required();
  component->add_option("--j", a.j, "zeta index, 1..d-1");
  p_opt(component);

  auto* verify = app.add_subcommand("verify", "single identity checks");
  verify->require_subcommand(1);
  verify->fallthrough();
  auto* v_product = verify->add_subcommand("product", "prod_{e|n} Phi_e = f^n - z");
  d_opt(v_product)->required();
  n_opt(v_product)->required();
  auto* v_degree = verify->add_subcommand("degree", "deg_z Phi_n = D1(n)");
  d_opt(v_degree)->required();
  n_opt(v_degree)->required();
  auto* v_zeta = verify->add_subcommand("zeta", "Phi_{m,n} = prod_j zeta-components");
  d_opt(v_zeta)->required();
  m_opt(v_zeta, 1)->required();
  n_opt(v_zeta)->required();
  auto* v_simple = verify->add_subcommand("simple-roots", "simple roots on the fibre z = 0");
  d_opt(v_simple)->required();
  m_opt(v_simple, 1)->required();
  n_opt(v_simple)->required();
  v_simple->add_option("--j", a.j, "zeta index (default: all)");
  v_simple->add_flag("--exact", a.force_exact, "use the exact gcd instead of the modular certificate");
  auto* v_fact2 = verify->add_subcommand("fiber-factorization", "factorization at z = 0 for n | m - 1");
  d_opt(v_fact2)->required();
  m_opt(v_fact2, 1)->required();
  n_opt(v_fact2)->required();
  auto* v_split = verify->add_subcommand("splitting", "complete splitting at c = infinity");
  d_opt(v_split)->required();
  p_opt(v_split)->required();
  n_opt(v_split)->required();
  m_opt(v_split, 0);
  auto* v_red = verify->add_subcommand("reduction", "Phi_n over Q reduced mod p equals Phi_n over F_q");
  d_opt(v_red)->required();
  p_opt(v_red)->required();
  n_opt(v_red)->required();

  auto* roots = app.add_subcommand("series-roots", "coded roots of f^n - f^m in F_q((T))");
  d_opt(roots)->required();
  p_opt(roots)->required();
  n_opt(roots)->required();
  m_opt(roots, 0);
  auto* factor = app.add_subcommand("factor-fq", "factor f^n - f^m over F_q(c)");
  d_opt(factor)->required();
  p_opt(factor)->required();
  n_opt(factor)->required();
  m_opt(factor, 0);
  auto* scan = app.add_subcommand("scan", "all degree-e divisors of f^n - f^m within the coefficient bound");
  d_opt(scan)->required();
  p_opt(scan)->required();
  scan->add_option("--e", a.e, "target z-degree")->required()->check(CLI::Range(1L, 64L));
  n_opt(scan)->required();
  m_opt(scan, 0);
  auto* cap_opt = scan->add_option("--cap", a.cap, "candidate cap");

  auto* bounds = app.add_subcommand("bounds", "bound calculators");
  bounds->require_subcommand(1);
  bounds->fallthrough();
  auto* b_cs = bounds->add_subcommand("cs", "d1 g1 + d2 g2 + (d1 - 1)(d2 - 1)");
  b_cs->add_option("--g1", a.g1)->required();
  b_cs->add_option("--g2", a.g2)->required();
  b_cs->add_option("--d1", a.d1)->required();
  b_cs->add_option("--d2", a.d2)->required();
  auto* b_x0 = bounds->add_subcommand("x0", "gonality lower bound for X0(n)");
  d_opt(b_x0)->required();
  n_opt(b_x0)->required();
  b_x0->add_option("--genus", a.genus, "genus lower bound (default: asymptotic leading term)");
  auto* b_tower = bounds->add_subcommand("tower", "gonality lower bounds along X1(m, n)");
  d_opt(b_tower)->required();
  n_opt(b_tower)->required();
  b_tower->add_option("--gamma1", a.gamma1, "lower bound for gamma_1");
  b_tower->add_option("--m-max", a.m_max, "last level")->required()->check(CLI::Range(2L, 60L));
  b_tower->add_option("--genera", a.genera, "g_1 .. g_m-max instead of the ramification count")->delimiter(',');
  auto* b_count = bounds->add_subcommand("count", "n d^n");
  d_opt(b_count)->required();
  n_opt(b_count)->required();
  auto* b_const = bounds->add_subcommand("constfield", "q0^D");
  b_const->add_option("--q0", a.q0)->required()->check(CLI::Range(2L, 1L << 30));
  b_const->add_option("--D", a.D)->required()->check(CLI::Range(1L, 1L << 16));

  auto* all = app.add_subcommand("verify-all", "run the identity suite over a grid");
  all->add_flag("--quick", a.quick, "d <= 3, n <= 4, m <= 3, p in {3, 5}");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? kOk : kUsage;
  }

  Settings s;
  try {
    if (!a.config.empty()) apply_config_file(s, a.config);
    apply_environment(s, getenv_fn);
    if (prec_opt->count()) s.set("prec", std::to_string(a.prec));
    if (threads_opt->count()) s.threads = a.threads;
    if (json_flag->count()) s.json = true;
    if (cap_opt->count()) s.scan_cap = a.cap;
    a.cap = s.scan_cap;
  } catch (const UsageError& e) {
    emit_error(out, err, a.json, "usage", e.what());
    return kUsage;
  }

  Runner r(a, s, out);
  try {
    if (phi->parsed()) return r.phi_cmd();
    if (phimn->parsed()) return r.phimn_cmd();
    if (component->parsed()) return r.component_cmd();
    if (v_product->parsed()) return r.verify_product();
    if (v_degree->parsed()) return r.verify_degree();
    if (v_zeta->parsed()) return r.verify_zeta();
    if (v_simple->parsed()) return r.verify_simple_roots_cmd();
    if (v_fact2->parsed()) return r.verify_fiber_factorization();
    if (v_split->parsed()) return r.verify_splitting();
    if (v_red->parsed()) return r.verify_reduction();
    if (roots->parsed()) return r.series_roots();
    if (factor->parsed()) return r.factor_fq();
    if (scan->parsed()) return r.scan();
    if (b_cs->parsed()) return r.bounds_cs();
    if (b_x0->parsed()) return r.bounds_x0();
    if (b_tower->parsed()) return r.bounds_tower();
    if (b_count->parsed()) return r.bounds_count();
    if (b_const->parsed()) return r.bounds_constfield();
    if (all->parsed()) return r.verify_all();
  } catch (const CapExceeded& e) {
    emit_error(out, err, s.json, "cap-exceeded", e.what());
    return kExhausted;
  } catch (const PrecisionInsufficient& e) {
    emit_error(out, err, s.json, "precision-insufficient", e.what());
    return kExhausted;
  } catch (const UsageError& e) {
    emit_error(out, err, s.json, "usage", e.what());
    return kUsage;
  } catch (const DomainError& e) {
    emit_error(out, err, s.json, "domain", e.what());
    return kUsage;
  } catch (const std::exception& e) {
    emit_error(out, err, s.json, "internal", e.what());
    return kCheckFailed;
  }
  emit_error(out, err, s.json, "usage", "no command");
  return kUsage;
}

}  // namespace dynatomic::cli
