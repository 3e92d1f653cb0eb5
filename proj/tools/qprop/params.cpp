#include "qprop/params.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numbers>

namespace qprop::cli {

namespace {

using K = ParamKind;

std::vector<ParamSpec> angle_params() {
  return {
      {"theta", K::Angle, true, {}, "angle of the state to the A axes"},
      {"phi", K::Angle, true, {}, "rotation of the B axes relative to A"},
      {"degrees", K::Flag, false, "false", "read angles in degrees"},
  };
}

std::vector<ParamSpec> scale_params() {
  return {
      {"gamma", K::Positive, false, {}, "entropic energy scale (overrides hbar*omega/2)"},
      {"omega", K::Positive, false, "1", "oscillator frequency"},
      {"hbar", K::Positive, false, "1", "reduced Planck constant in model units"},
  };
}

std::vector<ParamSpec> joint_params() {
  return {
      {"buyer-price", K::Price, true, {}, "buyer's preferred price"},
      {"buyer-sigma", K::Positive, true, {}, "buyer's log-price spread"},
      {"seller-price", K::Price, false, {}, "seller's preferred price"},
      {"seller-sigma", K::Positive, false, {}, "seller's log-price spread"},
      {"fixed-price", K::Price, false, {}, "non-negotiable seller price"},
  };
}

template <typename... Lists>
std::vector<ParamSpec> concat(Lists... lists) {
  std::vector<ParamSpec> out;
  (out.insert(out.end(), lists.begin(), lists.end()), ...);
  return out;
}

std::vector<ModelSpec> build_specs() {
  std::vector<ModelSpec> specs;
  specs.push_back({"order-effect", "Joint and marginal answer probabilities for both question orders",
                   concat(angle_params(),
                          std::vector<ParamSpec>{{"order", K::Choice, false, "both",
                                                  "question order", {"ab", "ba", "both"}}})});
  specs.push_back({"interference", "Interference between measured and unmeasured protocols",
                   concat(angle_params(),
                          std::vector<ParamSpec>{
                              {"trials", K::Count, false, {}, "Monte Carlo collapse draws"},
                              {"seed", K::Seed, false, {}, "random seed (needed with trials)"},
                          })});
  specs.push_back({"equivalence", "Sequential vs entangled circuit check over random unitaries",
                   {
                       {"trials", K::Count, false, "1000", "random unitary pairs"},
                       {"seed", K::Seed, true, {}, "random seed"},
                       {"tol", K::Real, false, "1e-12", "per-event tolerance"},
                   }});
  specs.push_back({"reversal", "Preference reversal threshold decision",
                   {
                       {"x1", K::Positive, true, {}, "cost of the less attractive option"},
                       {"x2", K::Positive, true, {}, "cost of the more attractive option"},
                   }});
  specs.push_back({"force", "Entropic force of a Gaussian propensity curve",
                   concat(std::vector<ParamSpec>{
                              {"price", K::Price, true, {}, "preferred price (curve mean)"},
                              {"sigma", K::Positive, true, {}, "log-price spread"},
                              {"at", K::Price, true, {}, "price at which to evaluate"},
                          },
                          scale_params())});
  specs.push_back({"oscillator", "Harmonic oscillator parameters of a propensity curve",
                   {
                       {"sigma", K::Positive, true, {}, "log-price spread"},
                       {"omega", K::Positive, false, "1", "oscillator frequency"},
                       {"hbar", K::Positive, false, "1", "reduced Planck constant in model units"},
                   }});
  specs.push_back({"joint", "Joint buyer/seller propensity", joint_params()});
  specs.push_back({"work", "Work to move between two prices against the entropic force",
                   concat(std::vector<ParamSpec>{
                              {"price", K::Price, true, {}, "preferred price (curve mean)"},
                              {"sigma", K::Positive, true, {}, "log-price spread"},
                              {"from", K::Price, true, {}, "starting price"},
                              {"to", K::Price, true, {}, "final price"},
                          },
                          scale_params())});
  specs.push_back({"sample", "Sample transaction prices from the joint propensity",
                   concat(joint_params(), std::vector<ParamSpec>{
                                              {"n", K::Count, true, {}, "number of samples"},
                                              {"seed", K::Seed, true, {}, "random seed"},
                                          })});
  specs.push_back(
      {"curves", "Plot-ready propensity and force curves on a log-price grid",
       concat(std::vector<ParamSpec>{
                  {"buyer-price", K::Price, true, {}, "buyer's preferred price"},
                  {"buyer-sigma", K::Positive, true, {}, "buyer's log-price spread"},
                  {"seller-price", K::Price, false, {}, "seller's preferred price"},
                  {"seller-sigma", K::Positive, false, {}, "seller's log-price spread"},
                  {"grid-min", K::Price, false, {}, "lowest grid price"},
                  {"grid-max", K::Price, false, {}, "highest grid price"},
                  {"points", K::Count, false, "501", "grid points", {}, 2},
              },
              scale_params())});
  return specs;
}

}  // namespace

const ParamSpec* ModelSpec::find(std::string_view param) const {
  const auto it = std::find_if(params.begin(), params.end(),
                               [&](const ParamSpec& p) { return p.name == param; });
  return it == params.end() ? nullptr : &*it;
}

const std::vector<ModelSpec>& model_specs() {
  static const std::vector<ModelSpec> specs = build_specs();
  return specs;
}

const ModelSpec& model_spec(std::string_view name) {
  for (const ModelSpec& m : model_specs())
    if (m.name == name) return m;
  throw UsageError("unknown model '" + std::string(name) + "'", "model");
}

double parse_real(std::string_view text, std::string_view name) {
  double value = 0.0;
  const char* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc() || ptr != end || !std::isfinite(value)) {
    throw UsageError("parameter '" + std::string(name) + "' expects a finite number, got '" +
                         std::string(text) + "'",
                     std::string(name));
  }
  return value;
}

std::uint64_t parse_unsigned(std::string_view text, std::string_view name) {
  std::uint64_t value = 0;
  const char* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc() || ptr != end) {
    throw UsageError("parameter '" + std::string(name) + "' expects an unsigned integer, got '" +
                         std::string(text) + "'",
                     std::string(name));
  }
  return value;
}

bool parse_bool(std::string_view text, std::string_view name) {
  if (text == "true" || text == "1" || text == "yes" || text == "on") return true;
  if (text == "false" || text == "0" || text == "no" || text == "off") return false;
  throw UsageError("parameter '" + std::string(name) + "' expects true or false, got '" +
                       std::string(text) + "'",
                   std::string(name));
}

Params::Params(const ModelSpec& spec, RawParams values) : spec_(&spec), values_(std::move(values)) {}

bool Params::has(std::string_view name) const { return values_.find(name) != values_.end(); }

const std::string& Params::text(std::string_view name) const {
  const auto it = values_.find(name);
  if (it == values_.end()) throw std::logic_error("parameter not set: " + std::string(name));
  return it->second;
}

double Params::real(std::string_view name) const {
  const double v = parse_real(text(name), name);
  const ParamSpec* p = spec_->find(name);
  if (p && p->kind == ParamKind::Angle && flag("degrees")) return v * std::numbers::pi / 180.0;
  return v;
}

std::optional<double> Params::maybe_real(std::string_view name) const {
  if (!has(name)) return std::nullopt;
  return real(name);
}

std::uint64_t Params::count(std::string_view name) const { return parse_unsigned(text(name), name); }

std::optional<std::uint64_t> Params::maybe_count(std::string_view name) const {
  if (!has(name)) return std::nullopt;
  return count(name);
}

bool Params::flag(std::string_view name) const { return has(name) && parse_bool(text(name), name); }

Params validate(const ModelSpec& spec, RawParams raw) {
  for (const auto& [key, value] : raw) {
    const ParamSpec* p = spec.find(key);
    if (!p) {
      throw UsageError("unknown parameter '" + key + "' for model " + std::string(spec.name), key);
    }
    switch (p->kind) {
      case ParamKind::Angle:
      case ParamKind::Real:
        parse_real(value, key);
        break;
      case ParamKind::Positive:
      case ParamKind::Price:
        if (!(parse_real(value, key) > 0.0)) {
          throw UsageError("parameter '" + key + "' must be positive, got " + value, key);
        }
        break;
      case ParamKind::Count:
        if (parse_unsigned(value, key) < p->min_count) {
          throw UsageError("parameter '" + key + "' must be at least " +
                               std::to_string(p->min_count) + ", got " + value,
                           key);
        }
        break;
      case ParamKind::Seed:
        parse_unsigned(value, key);
        break;
      case ParamKind::Choice:
        if (std::find(p->choices.begin(), p->choices.end(), value) == p->choices.end()) {
          std::string allowed;
          for (std::string_view c : p->choices) allowed += (allowed.empty() ? "" : "|") + std::string(c);
          throw UsageError("parameter '" + key + "' must be one of " + allowed + ", got " + value, key);
        }
        break;
      case ParamKind::Flag:
        parse_bool(value, key);
        break;
    }
  }
  for (const ParamSpec& p : spec.params) {
    if (raw.count(p.name)) continue;
    if (p.required) {
      throw UsageError("missing required parameter '" + std::string(p.name) + "'", std::string(p.name));
    }
    if (!p.default_value.empty()) raw.emplace(std::string(p.name), std::string(p.default_value));
  }
  return Params(spec, std::move(raw));
}

}  // namespace qprop::cli
