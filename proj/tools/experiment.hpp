#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "outer/io.hpp"

namespace outer::experiment {

enum class Suite { distance_oracle, fold_additivity, whitehead_oracle, qg_check };
std::string to_string(Suite s);
/// Throws Error on an unknown name.
Suite suite_from_string(const std::string& name);

struct Config {
  Suite suite = Suite::distance_oracle;
  std::uint64_t seed = 1;
  int rank = 3;
  /// Random instances (for whitehead-oracle: random primitive images after the exhaustive words).
  int instances = 20;
  int workers = 1;
  int max_denominator = 12;
  int automorphism_moves = 6;
  /// Ball complexity bound and Whitehead product length for qg-check.
  int bound = 6;
  int product_length = 3;
  int K = 6;
  /// Level-set cap for is_simple.
  int orbit_cap = 100000;
  /// Exhaustive word length and oracle product depth for whitehead-oracle.
  int max_word_length = 6;
  int oracle_depth = 4;
  /// Probe loops per folding path.
  int probe_loops = 10;
  /// Directory for <suite>.jsonl and <suite>-summary.json; nothing is written when empty.
  std::string out_dir;

  /// Throws Error unless every bound is positive.
  void validate() const;
};

Config config_from_json(const Json& j);
Json to_json(const Config& c);

struct Report {
  /// One JSON object per instance, in instance order.
  std::vector<std::string> lines;
  Json summary;
  int violations = 0;
  int errors = 0;
};

/// Runs the suite on `workers` threads; the report does not depend on the worker count.
Report run(const Config& config);
/// Writes the report into config.out_dir, creating it if needed.
void write(const Report& report, const Config& config);

}  // namespace outer::experiment
