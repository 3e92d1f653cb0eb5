#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qprop::cli {

// Invalid flags or config: maps to exit code 2.
class UsageError : public std::runtime_error {
 public:
  explicit UsageError(const std::string& message, std::string param = {})
      : std::runtime_error(message), param_(std::move(param)) {}

  // Offending parameter name, if any.
  const std::string& param() const { return param_; }

 private:
  std::string param_;
};

// Model-level failure (library precondition, failed check): exit code 1.
class ModelError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class ParamKind {
  Angle,     // radians, or degrees with the degrees flag
  Real,      // any finite real
  Positive,  // finite real > 0
  Price,     // currency units > 0, converted to log-price by the model
  Count,     // unsigned integer >= min_count
  Seed,      // unsigned 64-bit integer
  Choice,    // one of choices
  Flag,      // boolean switch
};

struct ParamSpec {
  std::string_view name;
  ParamKind kind;
  bool required = false;
  std::string_view default_value = {};
  std::string_view help = {};
  std::vector<std::string_view> choices = {};
  std::uint64_t min_count = 1;
};

struct ModelSpec {
  std::string_view name;
  std::string_view summary;
  std::vector<ParamSpec> params;

  const ParamSpec* find(std::string_view param) const;
};

// Every model, in subcommand order.
const std::vector<ModelSpec>& model_specs();
// Throws UsageError for an unknown model name.
const ModelSpec& model_spec(std::string_view name);

using RawParams = std::map<std::string, std::string, std::less<>>;

// Validated parameter set for one model. Values are parsed lazily but
// validate() has already checked every present value and every required
// parameter, so accessors only throw on programming errors.
class Params {
 public:
  Params(const ModelSpec& spec, RawParams values);

  const ModelSpec& spec() const { return *spec_; }
  // Effective values, including defaults.
  const RawParams& values() const { return values_; }

  bool has(std::string_view name) const;
  double real(std::string_view name) const;  // angles already in radians
  std::optional<double> maybe_real(std::string_view name) const;
  std::uint64_t count(std::string_view name) const;
  std::optional<std::uint64_t> maybe_count(std::string_view name) const;
  bool flag(std::string_view name) const;
  const std::string& text(std::string_view name) const;

 private:
  const ModelSpec* spec_;
  RawParams values_;
};

// Checks names, types, ranges and required keys; fills defaults. Throws
// UsageError naming the offending parameter.
Params validate(const ModelSpec& spec, RawParams raw);

double parse_real(std::string_view text, std::string_view name);
std::uint64_t parse_unsigned(std::string_view text, std::string_view name);
bool parse_bool(std::string_view text, std::string_view name);

}  // namespace qprop::cli
