#pragma once

#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

namespace slackclear {

// Fixed 12-significant-digit rendering used for every numeric CSV field; the
// reproducibility contract compares these bytes across runs.
std::string format_number(double x);

class CsvWriter {
 public:
  CsvWriter(const std::filesystem::path& file,
            const std::vector<std::string>& header);

  CsvWriter& cell(double value);
  CsvWriter& cell(std::size_t value);
  CsvWriter& cell(const std::string& value);
  void end_row();

 private:
  std::ofstream out_;
  std::size_t columns_;
  std::size_t cells_in_row_ = 0;
};

}  // namespace slackclear
