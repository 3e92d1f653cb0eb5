#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

namespace qprop::cli {

using Json = nlohmann::ordered_json;

// Significant digits for every emitted real.
inline constexpr int kSignificantDigits = 12;

// "%.12g" with negative zero printed as 0.
std::string format_real(double v);
// v rounded to 12 significant digits, for JSON payloads.
double round_real(double v);

using Cell = std::variant<double, std::int64_t, std::uint64_t, bool, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

// Header row, comma-separated, LF line endings.
void write_csv(std::ostream& out, const Table& table);

// Numbers in JSON go through round_real.
Json json_real(double v);

}  // namespace qprop::cli
