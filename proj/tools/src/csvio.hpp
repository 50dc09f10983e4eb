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

#ifndef GATEMIX_TOOLS_CSVIO_HPP_
#define GATEMIX_TOOLS_CSVIO_HPP_

#include <cstdint>
#include <string>
#include <vector>

// Deterministic CSV emission: fixed versioned headers, %.17g doubles, footer
// comment lines for fit summaries.  Identical config + seed must reproduce
// byte-identical files.

namespace gatemix::cli {

std::string fmt_double(double value);
std::string fmt_long(long value);

class CsvWriter {
 public:
  // `format_tag` becomes the first line: "# <format_tag>".
  CsvWriter(std::string format_tag, std::vector<std::string> header);

  void add_row(std::vector<std::string> cells);
  void add_footer(std::string comment_line);  // emitted as "# <line>"

  std::string str() const;
  void write(const std::string& path) const;

 private:
  std::string format_tag_;
  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
  std::vector<std::string> footers_;
};

// FNV-1a 64-bit digest of a file's bytes, as a fixed-width hex string.
std::string file_digest(const std::string& path);

}  // namespace gatemix::cli

#endif  // GATEMIX_TOOLS_CSVIO_HPP_
