#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "qprop/models.hpp"
#include "qprop/params.hpp"

namespace qprop::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitModelError = 1;
inline constexpr int kExitUsage = 2;

struct Environment {
  std::optional<std::string> default_seed;  // QPROP_SEED
};

Environment process_environment();

// Runs `qprop <args...>` (args exclude the program name). Returns the exit
// code: 0 success, 1 model failure, 2 usage or validation error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
            const Environment& env = {});

// JSON RunRecord: config echo, tool version, seed, wall time and results.
Json make_run_record(const Params& params, const std::string& output, const ModelResult& result,
                     double wall_time_s);

}  // namespace qprop::cli
