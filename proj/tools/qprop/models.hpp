#pragma once

#include <string>

#include "qprop/output.hpp"
#include "qprop/params.hpp"

namespace qprop::cli {

struct ModelResult {
  Json results;
  Table table;
  int exit_code = 0;       // 1 when the model ran but its own check failed
  std::string diagnostic;  // written to stderr when non-empty
};

// Runs the model named by params.spec(). Throws UsageError for parameter
// combinations validate() cannot express, ModelError or qprop::Error when
// the model itself rejects its inputs.
ModelResult run_model(const Params& params);

}  // namespace qprop::cli
