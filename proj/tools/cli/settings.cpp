#include "settings.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>

#include "dynatomic/parallel.hpp"

namespace dynatomic::cli {
namespace {

template <class T>
T parse_number(const std::string& key, const std::string& value) {
  T out{};
  const auto* end = value.data() + value.size();
  auto [ptr, ec] = std::from_chars(value.data(), end, out);
  if (ec != std::errc{} || ptr != end) throw UsageError("bad value '" + value + "' for " + key);
  return out;
}

bool parse_bool(const std::string& key, std::string v) {
  std::transform(v.begin(), v.end(), v.begin(), [](unsigned char ch) { return std::tolower(ch); });
  if (v == "1" || v == "true" || v == "yes" || v == "on") return true;
  if (v == "0" || v == "false" || v == "no" || v == "off") return false;
  throw UsageError("bad boolean '" + v + "' for " + key);
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

const std::map<std::string, std::string>& setting_keys() {
  static const std::map<std::string, std::string> keys = {
      {"prec", "default series precision"},
      {"threads", "worker threads (0: all cores)"},
      {"scan_cap", "candidate cap of the divisor scan"},
      {"candidate_cap", "cap on orbit unions tried by factor-fq"},
      {"max_orbits", "cap on local orbits for factor-fq"},
      {"direct_budget", "cost above which zeta checks use the modular route"},
      {"max_deg_z", "cap on z-degrees of computed polynomials"},
      {"max_escalations", "precision doublings before giving up"},
      {"json", "emit JSON"},
  };
  return keys;
}

void Settings::set(const std::string& key, const std::string& value) {
  if (key == "prec") {
    prec = parse_number<long>(key, value);
    if (prec < 3) throw UsageError("prec must be >= 3");
  } else if (key == "threads") {
    threads = parse_number<unsigned>(key, value);
  } else if (key == "scan_cap") {
    scan_cap = parse_number<std::int64_t>(key, value);
  } else if (key == "candidate_cap") {
    candidate_cap = parse_number<std::int64_t>(key, value);
  } else if (key == "max_orbits") {
    max_orbits = parse_number<long>(key, value);
  } else if (key == "direct_budget") {
    direct_budget = parse_number<double>(key, value);
  } else if (key == "max_deg_z") {
    max_deg_z = parse_number<long>(key, value);
  } else if (key == "max_escalations") {
    max_escalations = parse_number<int>(key, value);
  } else if (key == "json") {
    json = parse_bool(key, value);
  } else {
    throw UsageError("unknown setting '" + key + "'");
  }
}

unsigned Settings::effective_threads() const { return threads == 0 ? default_threads() : threads; }

void apply_config_file(Settings& s, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read config file " + path);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw UsageError(path + ":" + std::to_string(lineno) + ": expected key = value");
    std::string key = trim(line.substr(0, eq));
    std::replace(key.begin(), key.end(), '-', '_');
    s.set(key, trim(line.substr(eq + 1)));
  }
}

void apply_environment(Settings& s, const std::function<const char*(const char*)>& getenv_fn) {
  for (const auto& [key, _] : setting_keys()) {
    std::string var = "DYNATOMIC_" + key;
    std::transform(var.begin(), var.end(), var.begin(), [](unsigned char ch) { return std::toupper(ch); });
    if (const char* v = getenv_fn(var.c_str())) s.set(key, v);
  }
}

}  // namespace dynatomic::cli
