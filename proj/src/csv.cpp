#include "slackclear/csv.hpp"

#include <cstdio>
#include <stdexcept>

namespace slackclear {

std::string format_number(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

CsvWriter::CsvWriter(const std::filesystem::path& file,
                     const std::vector<std::string>& header)
    : out_(file), columns_(header.size()) {
  if (!out_) {
    throw std::runtime_error("csv: cannot open " + file.string());
  }
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (i) out_ << ',';
    out_ << header[i];
  }
  out_ << '\n';
}

CsvWriter& CsvWriter::cell(double value) { return cell(format_number(value)); }

CsvWriter& CsvWriter::cell(std::size_t value) {
  return cell(std::to_string(value));
}

CsvWriter& CsvWriter::cell(const std::string& value) {
  if (cells_in_row_) out_ << ',';
  out_ << value;
  ++cells_in_row_;
  return *this;
}

void CsvWriter::end_row() {
  if (cells_in_row_ != columns_) {
    throw std::logic_error("csv: row width does not match header");
  }
  out_ << '\n';
  cells_in_row_ = 0;
}

}  // namespace slackclear
