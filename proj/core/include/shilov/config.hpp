#pragma once

#include "shilov/metric.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace shilov {

// Generic config tree shared by the TOML and JSON front ends.
struct ConfigValue {
  enum class Kind { Str, Num, Bool, Array, Table };

  Kind kind = Kind::Table;
  std::string str;
  Rat num;
  bool boolean = false;
  std::vector<ConfigValue> array;
  std::map<std::string, ConfigValue> table;
  int line = 0;  // source line for error messages

  static ConfigValue make_table(int line = 0);
};

// Parses the TOML subset used by the config files: [table] and [[array]]
// headers, key = value pairs, strings, numbers (read exactly), booleans,
// arrays and inline tables. Errors carry line numbers.
ConfigValue toml_parse(const std::string& text);

ConfigValue json_to_config(const std::string& text);

struct ExperimentConfig {
  std::optional<MetricSpec> metric;
  std::optional<MetricSpec> metric2;  // second operand for distance commands
  std::map<std::string, std::string> sections;  // raw polynomial text
  std::optional<std::vector<Rat>> target;
  std::vector<std::vector<std::size_t>> separate;  // J-subsets for cmd shilov

  int nmax = 20;
  Rat tol = Rat(1, 1000000000);
  Rat prec = 64;
  int prec_doublings = 4;
  int threads = 0;
  int counting_level = 48;
  std::uint64_t seed = 1;
};

ExperimentConfig config_from_value(const ConfigValue& root);
ExperimentConfig config_from_toml(const std::string& text);
ExperimentConfig config_from_json(const std::string& text);
// Dispatches on the file extension: .json is JSON, everything else TOML.
ExperimentConfig config_load(const std::string& path);

// Canonical exports; parsing them back yields an identical spec.
std::string metric_to_toml(const MetricSpec& spec);
std::string metric_to_json(const MetricSpec& spec);

}  // namespace shilov
