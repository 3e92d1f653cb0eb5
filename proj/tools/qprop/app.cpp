#include "qprop/app.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <memory>
#include <sstream>

#include <CLI11.hpp>

#include "qprop/config.hpp"
#include "qprop/errors.hpp"
#include "qprop/version.hpp"

namespace qprop::cli {

namespace {

struct Subcommand {
  const ModelSpec* spec = nullptr;
  CLI::App* app = nullptr;
  std::map<std::string, std::string> values;
  std::map<std::string, bool> flags;
  std::map<std::string, CLI::Option*> options;
  std::string output = "csv";
};

std::string type_name(ParamKind kind) {
  switch (kind) {
    case ParamKind::Angle: return "ANGLE";
    case ParamKind::Price: return "PRICE";
    case ParamKind::Count:
    case ParamKind::Seed: return "UINT";
    case ParamKind::Choice: return "CHOICE";
    default: return "NUM";
  }
}

struct Outcome {
  ModelResult result;
  double wall_time_s = 0.0;
};

// Runs the model, translating exceptions into exit codes.
int execute(const Params& params, std::ostream& err, Outcome& outcome,
            const ScenarioConfig* config = nullptr) {
  const auto start = std::chrono::steady_clock::now();
  try {
    outcome.result = run_model(params);
  } catch (const UsageError& e) {
    err << "error: " << (config ? locate(*config, e).what() : e.what()) << '\n';
    return kExitUsage;
  } catch (const ModelError& e) {
    err << "error: " << e.what() << '\n';
    return kExitModelError;
  } catch (const qprop::Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitModelError;
  } catch (const std::logic_error& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitModelError;
  }
  outcome.wall_time_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return kExitOk;
}

void emit(std::ostream& out, const Params& params, const std::string& output, const Outcome& o) {
  if (output == "csv") {
    write_csv(out, o.result.table);
  } else {
    out << make_run_record(params, output, o.result, o.wall_time_s).dump(2) << '\n';
  }
}

int finish(const Outcome& o, std::ostream& err) {
  if (!o.result.diagnostic.empty()) err << "error: " << o.result.diagnostic << '\n';
  return o.result.exit_code;
}

int run_config(const std::string& path, const std::string& out_path, std::ostream& out,
               std::ostream& err) {
  ScenarioConfig config;
  std::optional<Params> params;
  try {
    config = load_config(path);
    params.emplace(validate_config(config));
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  Outcome outcome;
  if (const int code = execute(*params, err, outcome, &config); code != kExitOk) return code;

  if (out_path.empty()) {
    emit(out, *params, config.output, outcome);
  } else {
    std::ofstream file(out_path, std::ios::binary);
    if (!file) {
      err << "error: cannot write " << out_path << '\n';
      return kExitUsage;
    }
    emit(file, *params, config.output, outcome);
  }
  return finish(outcome, err);
}

}  // namespace

Environment process_environment() {
  Environment env;
  if (const char* seed = std::getenv("QPROP_SEED"); seed && *seed) env.default_seed = seed;
  return env;
}

Json make_run_record(const Params& params, const std::string& output, const ModelResult& result,
                     double wall_time_s) {
  Json config = Json::object();
  config["model"] = std::string(params.spec().name);
  config["output"] = output;
  Json values = Json::object();
  for (const auto& [key, value] : params.values()) values[key] = value;
  config["params"] = values;

  Json record = Json::object();
  record["tool"] = "qprop";
  record["version"] = kVersion;
  record["config"] = config;
  record["seed"] = params.has("seed") ? Json(params.count("seed")) : Json(nullptr);
  record["wall_time_s"] = json_real(wall_time_s);
  record["results"] = result.results;
  return record;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
            const Environment& env) {
  CLI::App app{"Quantum circuit decision models and price propensity curves", "qprop"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kVersion));
  app.footer(
      "Exit codes: 0 success, 1 model failure, 2 usage error.\n"
      "QPROP_SEED supplies a default --seed for stochastic subcommands.");

  std::vector<std::unique_ptr<Subcommand>> subs;
  for (const ModelSpec& spec : model_specs()) {
    auto sub = std::make_unique<Subcommand>();
    sub->spec = &spec;
    sub->app = app.add_subcommand(std::string(spec.name), std::string(spec.summary));
    for (const ParamSpec& p : spec.params) {
      const std::string flag = "--" + std::string(p.name);
      std::string help(p.help);
      if (!p.default_value.empty() && p.kind != ParamKind::Flag) {
        help += " (default " + std::string(p.default_value) + ")";
      }
      if (p.required) help += " [required]";
      if (p.kind == ParamKind::Flag) {
        sub->options[std::string(p.name)] =
            sub->app->add_flag(flag, sub->flags[std::string(p.name)], help);
      } else {
        sub->options[std::string(p.name)] =
            sub->app->add_option(flag, sub->values[std::string(p.name)], help)
                ->type_name(type_name(p.kind));
      }
    }
    sub->app->add_option("--output", sub->output, "output format (default csv)")
        ->check(CLI::IsMember({"csv", "json"}));
    subs.push_back(std::move(sub));
  }

  std::string config_path;
  std::string out_path;
  CLI::App* run = app.add_subcommand("run", "Run a scenario config file and print its RunRecord");
  run->add_option("config", config_path, "scenario config file")->required();
  run->add_option("--out", out_path, "write the record to this path instead of stdout");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (run->parsed()) return run_config(config_path, out_path, out, err);

  for (const auto& sub : subs) {
    if (!sub->app->parsed()) continue;
    RawParams raw;
    for (const auto& [name, option] : sub->options) {
      if (option->count() == 0) continue;
      raw[name] = sub->flags.count(name) ? (sub->flags[name] ? "true" : "false") : sub->values[name];
    }
    if (sub->spec->find("seed") && !raw.count("seed") && env.default_seed) {
      raw["seed"] = *env.default_seed;
    }

    std::optional<Params> params;
    try {
      params.emplace(validate(*sub->spec, std::move(raw)));
    } catch (const UsageError& e) {
      err << "error: " << e.what() << "\n\n" << sub->app->help();
      return kExitUsage;
    }

    Outcome outcome;
    if (const int code = execute(*params, err, outcome); code != kExitOk) {
      if (code == kExitUsage) err << '\n' << sub->app->help();
      return code;
    }
    emit(out, *params, sub->output, outcome);
    return finish(outcome, err);
  }
  return kExitUsage;
}

}  // namespace qprop::cli
