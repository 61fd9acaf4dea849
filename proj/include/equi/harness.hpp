#ifndef EQUI_HARNESS_HPP
#define EQUI_HARNESS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "equi/serialize.hpp"

namespace equi {

/// Resolved verification-run configuration.
struct SuiteConfig {
  GAction action = GAction::natural(FiniteGroup::symmetric(3));
  std::string group_name = "S3";
  std::uint64_t seed = 1;
  int sample_count = 200;
  double tolerance = 1e-9;
  std::vector<std::string> suites;
  int audit_n = 4;
  int demo_steps = 200;
};

/// Known suite names, in canonical order.
const std::vector<std::string>& known_suites();

/// Parses and validates a config; throws ConfigError naming the bad field.
/// Group source: "builtin" name, "cayley_table", inline "degree"/"generators"/
/// "action", or "group_file" (path to a group/action JSON object).
SuiteConfig config_from_json(const Json& j);

/// Resolves a built-in group/action by name; throws ConfigError.
GAction builtin_action(const std::string& name);

/// Names of all built-ins, stable order.
std::vector<std::string> builtin_names();

/// Human-readable catalogue of the built-ins.
std::string list_builtins();

struct Report {
  Json body;    // suites + all_pass; deterministic for a given config+seed
  Json timing;  // wall-clock per suite, outside the determinism contract
  bool all_pass = false;

  /// body plus the timing block, for writing to disk.
  Json full() const;
};

/// Runs every requested suite once; deterministic given config+seed.
Report run(const SuiteConfig& config);

}  // namespace equi

#endif
