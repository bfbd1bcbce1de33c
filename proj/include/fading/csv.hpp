#pragma once

#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace fading::cli {

/// Shortest round-trip decimal form of x (17 significant digits), locale
/// independent; infinities print as inf/-inf.
std::string format_g17(double x);

/// Emits the project CSV dialect: `\n` line endings, a first line
/// `# vmf-fading v1 <param echo>`, a column-name line, then numeric rows
/// at 17 significant digits. Byte deterministic for identical inputs.
class CsvWriter {
 public:
  CsvWriter(std::ostream& out, const std::string& param_echo,
            const std::vector<std::string>& columns);
  void row(std::span<const double> values);
  void row(std::initializer_list<double> values) {
    row(std::span<const double>(values.begin(), values.size()));
  }

 private:
  std::ostream& out_;
  std::size_t n_columns_;
};

}  // namespace fading::cli
