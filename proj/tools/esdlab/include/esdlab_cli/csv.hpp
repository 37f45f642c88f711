// Copyright 2026 The esdlab Authors
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

#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace esdlab::cli {

/// Shortest decimal that parses back to the same double; "inf", "-inf", "nan"
/// for non-finite values.
std::string format_double(double x);

/// Inverse of format_double. Throws std::invalid_argument.
double parse_double(const std::string& s);

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
};

/// RFC 4180 with LF line endings. Header fields are quoted when needed.
void write_csv(std::ostream& out, const Table& table);

/// Writes to `path`, or standard output for "-" / empty. Throws
/// std::runtime_error when the file cannot be written.
void write_csv(const std::string& path, const Table& table);

Table read_csv(const std::string& text);

}  // namespace esdlab::cli
