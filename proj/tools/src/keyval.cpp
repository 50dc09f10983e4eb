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

#include "keyval.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace gatemix::cli {

namespace {

std::string trim(const std::string& s) {
  std::size_t begin = 0;
  std::size_t end = s.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(s[begin]))) ++begin;
  while (end > begin && std::isspace(static_cast<unsigned char>(s[end - 1]))) --end;
  return s.substr(begin, end - begin);
}

[[noreturn]] void fail(const std::string& path, int line, const std::string& message) {
  throw ParseError(path + ":" + std::to_string(line) + ": " + message);
}

const KeyValue& require_key(const SpecDocument& doc, const Section& section,
                            const std::string& key) {
  const auto it = section.entries.find(key);
  if (it == section.entries.end()) {
    fail(doc.path, section.line, "[" + section.name + "] section is missing key '" + key + "'");
  }
  return it->second;
}

double parse_double(const SpecDocument& doc, int line, const std::string& token) {
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(token, &used);
  } catch (const std::exception&) {
    fail(doc.path, line, "expected a number, got '" + token + "'");
  }
  if (used != token.size()) {
    fail(doc.path, line, "trailing characters after number in '" + token + "'");
  }
  return value;
}

}  // namespace

SpecDocument parse_keyval_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError(path + ": cannot open file");
  }
  SpecDocument doc;
  doc.path = path;
  std::string raw;
  int line_no = 0;
  Section* current = nullptr;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::size_t hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    const std::string line = trim(raw);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') fail(path, line_no, "unterminated section header");
      const std::string name = trim(line.substr(1, line.size() - 2));
      if (name.empty()) fail(path, line_no, "empty section name");
      doc.sections.push_back(Section{name, line_no, {}});
      current = &doc.sections.back();
      continue;
    }
    const std::size_t eq = line.find('=');
    if (eq == std::string::npos) {
      fail(path, line_no, "expected 'key = value' or a [section] header");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) fail(path, line_no, "empty key");
    auto& table = current ? current->entries : doc.preamble;
    if (table.contains(key)) {
      fail(path, line_no, "duplicate key '" + key + "'");
    }
    table.emplace(key, KeyValue{value, line_no});
  }
  return doc;
}

double get_double(const SpecDocument& doc, const Section& section, const std::string& key) {
  const KeyValue& kv = require_key(doc, section, key);
  return parse_double(doc, kv.line, kv.value);
}

std::vector<double> get_double_list(const SpecDocument& doc, const Section& section,
                                    const std::string& key) {
  const KeyValue& kv = require_key(doc, section, key);
  std::istringstream stream(kv.value);
  std::vector<double> values;
  std::string token;
  while (stream >> token) {
    values.push_back(parse_double(doc, kv.line, token));
  }
  if (values.empty()) {
    fail(doc.path, kv.line, "key '" + key + "' needs at least one number");
  }
  return values;
}

std::vector<int> get_int_list(const SpecDocument& doc, const Section& section,
                              const std::string& key) {
  const std::vector<double> values = get_double_list(doc, section, key);
  std::vector<int> out;
  out.reserve(values.size());
  for (double v : values) {
    const int i = static_cast<int>(v);
    if (static_cast<double>(i) != v) {
      fail(doc.path, require_key(doc, section, key).line, "key '" + key + "' must be integral");
    }
    out.push_back(i);
  }
  return out;
}

long get_long(const SpecDocument& doc, const Section& section, const std::string& key) {
  const double v = get_double(doc, section, key);
  const long i = static_cast<long>(v);
  if (static_cast<double>(i) != v) {
    fail(doc.path, require_key(doc, section, key).line, "key '" + key + "' must be integral");
  }
  return i;
}

std::string get_string(const SpecDocument& doc, const Section& section, const std::string& key) {
  return require_key(doc, section, key).value;
}

bool has_key(const Section& section, const std::string& key) {
  return section.entries.contains(key);
}

long preamble_long(const SpecDocument& doc, const std::string& key, long fallback) {
  const auto it = doc.preamble.find(key);
  if (it == doc.preamble.end()) return fallback;
  const double v = parse_double(doc, it->second.line, it->second.value);
  const long i = static_cast<long>(v);
  if (static_cast<double>(i) != v) {
    throw ParseError(doc.path + ":" + std::to_string(it->second.line) + ": key '" + key +
                     "' must be integral");
  }
  return i;
}

}  // namespace gatemix::cli
