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

#ifndef GATEMIX_TOOLS_KEYVAL_HPP_
#define GATEMIX_TOOLS_KEYVAL_HPP_

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

// Sectioned key-value text format shared by the gate and circuit spec files:
//
//   width = 2            # preamble entries before the first section
//   [gate]
//   qubits = 0
//   target = 0.3926990816987241
//   options = 0.35 0.40
//
// '#' starts a comment, blank lines are ignored, keys may not repeat within
// a section.  All diagnostics carry file:line positions.

namespace gatemix::cli {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct KeyValue {
  std::string value;
  int line = 0;
};

struct Section {
  std::string name;
  int line = 0;
  std::map<std::string, KeyValue> entries;
};

struct SpecDocument {
  std::string path;
  std::map<std::string, KeyValue> preamble;
  std::vector<Section> sections;
};

SpecDocument parse_keyval_file(const std::string& path);

// Typed lookups; `where` names the section for diagnostics.  Missing
// mandatory keys and malformed numbers raise ParseError.
double get_double(const SpecDocument& doc, const Section& section, const std::string& key);
std::vector<double> get_double_list(const SpecDocument& doc, const Section& section,
                                    const std::string& key);
std::vector<int> get_int_list(const SpecDocument& doc, const Section& section,
                              const std::string& key);
long get_long(const SpecDocument& doc, const Section& section, const std::string& key);
std::string get_string(const SpecDocument& doc, const Section& section, const std::string& key);
bool has_key(const Section& section, const std::string& key);

// Preamble variants.
long preamble_long(const SpecDocument& doc, const std::string& key, long fallback);

}  // namespace gatemix::cli

#endif  // GATEMIX_TOOLS_KEYVAL_HPP_
