#include "qprop/output.hpp"

#include <cstdlib>

#include <fmt/format.h>

namespace qprop::cli {

std::string format_real(double v) {
  if (v == 0.0) return "0";
  return fmt::format("{:.{}g}", v, kSignificantDigits);
}

double round_real(double v) { return std::strtod(format_real(v).c_str(), nullptr); }

Json json_real(double v) { return Json(round_real(v)); }

namespace {

struct CellWriter {
  std::ostream& out;
  void operator()(double v) const { out << format_real(v); }
  void operator()(std::int64_t v) const { out << v; }
  void operator()(std::uint64_t v) const { out << v; }
  void operator()(bool v) const { out << (v ? "true" : "false"); }
  void operator()(const std::string& v) const { out << v; }
};

}  // namespace

void write_csv(std::ostream& out, const Table& table) {
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    out << (i ? "," : "") << table.columns[i];
  }
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out << ',';
      std::visit(CellWriter{out}, row[i]);
    }
    out << '\n';
  }
}

}  // namespace qprop::cli
