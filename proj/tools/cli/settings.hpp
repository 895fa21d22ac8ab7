#pragma once

// Tunables shared by all subcommands.  Later sources win:
// defaults < config file < DYNATOMIC_* environment < command-line flags.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

namespace dynatomic::cli {

struct Settings {
  long prec = 32;
  unsigned threads = 0;  // 0: hardware concurrency
  std::int64_t scan_cap = 10'000'000;
  std::int64_t candidate_cap = 1'000'000;
  long max_orbits = 64;
  double direct_budget = 6e8;
  long max_deg_z = 20000;
  int max_escalations = 4;
  bool json = false;

  /// Sets one key; throws UsageError on an unknown key or a bad value.
  void set(const std::string& key, const std::string& value);
  unsigned effective_threads() const;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// key = value lines; '#' starts a comment.
void apply_config_file(Settings& s, const std::string& path);

/// DYNATOMIC_PREC, DYNATOMIC_THREADS, ... (key upper-cased, '-' as '_').
/// getenv is injectable for tests.
void apply_environment(Settings& s, const std::function<const char*(const char*)>& getenv_fn);

/// Keys accepted by set(), in the spelling used by config files.
const std::map<std::string, std::string>& setting_keys();

}  // namespace dynatomic::cli
