// Copyright 2026 The rule4 Authors
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

#ifndef RULE4_CLI_HPP_
#define RULE4_CLI_HPP_

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "rule4/exactmath.hpp"
#include "rule4/partitions.hpp"

namespace rule4::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 2,
  kInput = 3,
  kVerification = 4,
};

enum class Format { kText, kJson, kCsv };

// "text" | "json" | "csv"
std::optional<Format> parse_format(std::string_view name);
std::string_view format_name(Format format);

// Environment variable consulted for the default --format.
inline constexpr const char* kFormatEnv = "RULE4_FORMAT";

// Exact values go out as {"exact": "p/q", "value": <double>}.
nlohmann::json to_json(const Rational& x);
// {"parts": [...], "frequencies": {"j": f_j}, "notation": "<...>"}
nlohmann::json to_json(const Partition& p);

struct Envelope {
  std::string command;
  Format format = Format::kText;
  nlohmann::json payload;
};

std::string render(const Envelope& envelope);

// Runs one command line (args[0] is the program name). Output goes to
// `out`, diagnostics to `err`; the return value is the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace rule4::cli

#endif  // RULE4_CLI_HPP_
