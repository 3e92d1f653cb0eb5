#include "qprop/config.hpp"

#include <fstream>

namespace qprop::cli {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

UsageError at_line(std::string_view source, int line, const std::string& message,
                   std::string param = {}) {
  return UsageError(std::string(source) + ":" + std::to_string(line) + ": " + message,
                    std::move(param));
}

}  // namespace

ScenarioConfig parse_config(std::istream& in, std::string_view source) {
  ScenarioConfig cfg;
  cfg.source = source;
  std::string section;
  bool have_section = false;
  int model_line = 0;
  std::string raw;
  int line_no = 0;

  while (std::getline(in, raw)) {
    ++line_no;
    const std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#' || line.front() == ';') continue;

    if (line.front() == '[') {
      if (line.back() != ']') throw at_line(source, line_no, "unterminated section header");
      if (have_section) throw at_line(source, line_no, "only one model section is allowed");
      section = std::string(trim(line.substr(1, line.size() - 2)));
      have_section = true;
      cfg.section_line = line_no;
      continue;
    }

    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw at_line(source, line_no, "expected 'key = value', got '" + std::string(line) + "'");
    }
    const std::string key(trim(line.substr(0, eq)));
    const std::string value(trim(line.substr(eq + 1)));
    if (key.empty()) throw at_line(source, line_no, "missing key before '='");
    if (value.empty()) throw at_line(source, line_no, "missing value for '" + key + "'", key);

    if (!have_section) {
      if (key == "model") {
        if (model_line) throw at_line(source, line_no, "duplicate key 'model'", key);
        cfg.model = value;
        model_line = line_no;
      } else if (key == "output") {
        if (value != "json" && value != "csv") {
          throw at_line(source, line_no, "output must be json or csv, got '" + value + "'", key);
        }
        cfg.output = value;
      } else {
        throw at_line(source, line_no, "unknown key '" + key + "' (expected model or output)", key);
      }
      continue;
    }

    if (cfg.params.count(key)) throw at_line(source, line_no, "duplicate key '" + key + "'", key);
    cfg.params.emplace(key, value);
    cfg.lines.emplace(key, line_no);
  }

  if (cfg.model.empty()) throw at_line(source, line_no, "missing required key 'model'", "model");
  try {
    model_spec(cfg.model);
  } catch (const UsageError& e) {
    throw at_line(source, model_line, e.what(), "model");
  }
  if (have_section && section != cfg.model) {
    throw at_line(source, cfg.section_line,
                  "section [" + section + "] does not match model '" + cfg.model + "'");
  }
  return cfg;
}

ScenarioConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open config file " + path.string());
  return parse_config(in, path.string());
}

UsageError locate(const ScenarioConfig& config, const UsageError& e) {
  int line = config.section_line;
  if (const auto it = config.lines.find(e.param()); it != config.lines.end()) line = it->second;
  return at_line(config.source, line, e.what(), e.param());
}

Params validate_config(const ScenarioConfig& config) {
  try {
    return validate(model_spec(config.model), config.params);
  } catch (const UsageError& e) {
    throw locate(config, e);
  }
}

}  // namespace qprop::cli
