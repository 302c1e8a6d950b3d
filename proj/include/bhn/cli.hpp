#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "bhn/growth.hpp"
#include "bhn/seqgen.hpp"

namespace bhn::cli {

enum class Command { build, verify, growth, oracle };
enum class Format { tsv, json };

std::string to_string(Command c);
std::string to_string(Format f);
Command parse_command(const std::string& s);
Format parse_format(const std::string& s);

/// Profile as written in a config file.
///   toy      {"kind": "toy", "f_slope": 16, "f_offset": 4} or {"kind": "toy", "f_table": [...]}
///   builtin  {"kind": "builtin", "c": 1, "epsilon": 1, "C0": 1, "C1": 1, "C2": 300}
///   table    {"kind": "table", "log_F": [...], "epsilon": 1, "C0": 1, "C1": 1, "C2": 0}
struct ProfileSpec {
  std::string kind = "toy";
  double c = 1.0;
  double epsilon = 1.0;
  double C0 = 1.0;
  double C1 = 1.0;
  double C2 = 0.0;
  std::int64_t f_slope = 16;
  std::int64_t f_offset = 4;
  std::vector<std::int64_t> f_table;
  std::vector<double> log_F;

  /// "toy" or "builtin".
  static ProfileSpec preset(const std::string& name);
  GrowthProfile to_profile() const;

  nlohmann::json to_json() const;
  static ProfileSpec from_json(const nlohmann::json& j);
  friend bool operator==(const ProfileSpec&, const ProfileSpec&) = default;
};

struct RunConfig {
  Command command = Command::verify;
  ProfileSpec profile;
  std::optional<std::int64_t> n;  // per-command default when absent
  std::uint64_t seed = 1;
  Format format = Format::tsv;
  std::optional<std::int64_t> budget_ms;
  std::optional<EnvelopeConstants> envelope;  // derived from the profile when absent

  // verify
  std::int64_t locality_length = 6;
  std::int64_t random_words = 1000;
  std::int64_t random_max_length = 64;
  std::int64_t max_generation_degree = 200;
  std::int64_t witness_count = 25;
  std::int64_t commuting_count = 50;
  // oracle
  std::int64_t pairwise_max_length = 4;

  std::int64_t resolved_n() const;
  EnvelopeConstants resolved_envelope() const;

  nlohmann::json to_json() const;
  /// Strict: unknown keys and wrong types raise ConfigError.
  static RunConfig from_json(const nlohmann::json& j);
  static RunConfig load(const std::string& path);
  friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

/// Runs config.command, writing its report to `out`. Returns the exit code:
/// 0 when every check passes, 1 otherwise. Budget overruns raise
/// BudgetExceeded.
int run(const RunConfig& config, std::ostream& out);

int cmd_build(const RunConfig& config, std::ostream& out);
int cmd_verify(const RunConfig& config, std::ostream& out);
int cmd_growth(const RunConfig& config, std::ostream& out);
int cmd_oracle(const RunConfig& config, std::ostream& out);

}  // namespace bhn::cli
