// Copyright 2026 The gatemix Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "csvio.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <utility>

namespace gatemix::cli {

std::string fmt_double(double value) {
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

std::string fmt_long(long value) { return std::to_string(value); }

CsvWriter::CsvWriter(std::string format_tag, std::vector<std::string> header)
    : format_tag_(std::move(format_tag)), header_(std::move(header)) {}

void CsvWriter::add_row(std::vector<std::string> cells) {
  if (cells.size() != header_.size()) {
    throw std::logic_error("CsvWriter: row width does not match the header");
  }
  rows_.push_back(std::move(cells));
}

void CsvWriter::add_footer(std::string comment_line) {
  footers_.push_back(std::move(comment_line));
}

std::string CsvWriter::str() const {
  std::string out = "# " + format_tag_ + "\n";
  for (std::size_t k = 0; k < header_.size(); ++k) {
    out += header_[k];
    out += (k + 1 == header_.size()) ? '\n' : ',';
  }
  for (const auto& row : rows_) {
    for (std::size_t k = 0; k < row.size(); ++k) {
      out += row[k];
      out += (k + 1 == row.size()) ? '\n' : ',';
    }
  }
  for (const auto& footer : footers_) {
    out += "# " + footer + "\n";
  }
  return out;
}

void CsvWriter::write(const std::string& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot open output file " + path);
  }
  out << str();
}

std::string file_digest(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot open file for digest: " + path);
  }
  std::uint64_t hash = 1469598103934665603ULL;
  char byte = 0;
  while (in.get(byte)) {
    hash ^= static_cast<unsigned char>(byte);
    hash *= 1099511628211ULL;
  }
  char buffer[20];
  std::snprintf(buffer, sizeof(buffer), "%016llx", static_cast<unsigned long long>(hash));
  return buffer;
}

}  // namespace gatemix::cli
