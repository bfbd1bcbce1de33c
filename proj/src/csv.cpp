#include "fading/csv.hpp"

#include <cstdio>
#include <stdexcept>

namespace fading::cli {

std::string format_g17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

CsvWriter::CsvWriter(std::ostream& out, const std::string& param_echo,
                     const std::vector<std::string>& columns)
    : out_(out), n_columns_(columns.size()) {
  out_ << "# vmf-fading v1 " << param_echo << "\n";
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (i) out_ << ',';
    out_ << columns[i];
  }
  out_ << "\n";
}

void CsvWriter::row(std::span<const double> values) {
  if (values.size() != n_columns_)
    throw std::logic_error("CsvWriter: row width does not match header");
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out_ << ',';
    out_ << format_g17(values[i]);
  }
  out_ << "\n";
}

}  // namespace fading::cli
