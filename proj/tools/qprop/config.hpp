#pragma once

// Scenario config files.
//
//   # comment
//   model = reversal
//   output = json
//
//   [reversal]
//   x1 = 1
//   x2 = 4
//
// Top-level keys are `model` (required) and `output` (json or csv). One
// section, named after the model, holds that model's parameters using the
// same names as the command-line flags. Unknown keys, duplicate keys and
// stray sections are errors.

#include <filesystem>
#include <istream>
#include <map>
#include <string>
#include <string_view>

#include "qprop/params.hpp"

namespace qprop::cli {

struct ScenarioConfig {
  std::string source;  // file name used in messages
  std::string model;
  std::string output = "json";
  RawParams params;
  std::map<std::string, int, std::less<>> lines;  // key -> line number
  int section_line = 0;
};

// Throws UsageError with a "source:line: message" text on syntax or schema
// errors.
ScenarioConfig parse_config(std::istream& in, std::string_view source);
ScenarioConfig load_config(const std::filesystem::path& path);

// validate() against the model's schema, relocating any UsageError to the
// offending line.
Params validate_config(const ScenarioConfig& config);

// Prefixes a UsageError raised while running the model with the line of
// the parameter it names.
UsageError locate(const ScenarioConfig& config, const UsageError& e);

}  // namespace qprop::cli
