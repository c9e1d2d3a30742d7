// Copyright 2026 The cpanchor Authors.
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

#ifndef CPANCHOR_CLI_H
#define CPANCHOR_CLI_H

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "cpanchor/matcore.h"

namespace cpanchor::cli {

enum class OutputFormat { Json, Text };

struct CliConfig {
    std::uint64_t seed = 0;
    Tolerance tol;
    OutputFormat output = OutputFormat::Json;
    bool exhaustive = false;
};

/// Exit codes: 0 success, 2 parse/validation error, 3 mathematical
/// precondition failure, 1 anything else.
int exit_code_for(ErrorKind kind);

/// Runs one command; `args` excludes the program name.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

/// Text rendering of a command's JSON result (same numbers, same order).
std::string render_text(const nlohmann::json &value);

}  // namespace cpanchor::cli

#endif  // CPANCHOR_CLI_H
