// Copyright 2026 The diamsieve Authors
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

#ifndef DIAMSIEVE_CLI_H_
#define DIAMSIEVE_CLI_H_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "diamsieve/rational.h"

namespace diamsieve::cli {

enum ExitCode : int {
  kOk = 0,
  kInternal = 1,
  kUsage = 2,
  kDomain = 3,
  kResource = 4,
};

// One output cell. monostate is an empty CSV field and JSON null.
using Cell = std::variant<std::monostate, std::string, double, std::int64_t, std::uint64_t, bool>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

// Fixed column set per subcommand.
const std::vector<std::string>& Columns(std::string_view subcommand);

// RFC 4180: fields containing a comma, quote, CR or LF are wrapped in
// quotes with inner quotes doubled.
std::string CsvField(std::string_view text);
void WriteCsv(const Table& table, std::ostream& out);
// An array with one object per row.
void WriteJson(const Table& table, std::ostream& out);

// "-p" values: a decimal ("0.25"), a fraction ("1/4") or "c=<real>", which
// is solved against the family's threshold expression.
struct ProbabilitySpec {
  enum class Kind { kDecimal, kFraction, kThreshold };
  Kind kind = Kind::kDecimal;
  Rational exact;
  double c = 0.0;
  std::string text;
};
// Throws InvalidArgument when malformed.
ProbabilitySpec ParseProbabilitySpec(std::string_view text);

// argv without the program name. Results go to `out` (or --output), one
// single-line diagnostic to `err` on failure.
int Run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int Main(int argc, const char* const* argv);

}  // namespace diamsieve::cli

#endif  // DIAMSIEVE_CLI_H_
