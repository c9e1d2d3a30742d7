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

#ifndef CPANCHOR_ERRORS_H
#define CPANCHOR_ERRORS_H

#include <stdexcept>
#include <string>
#include <string_view>

namespace cpanchor {

enum class ErrorKind {
    NonSquare,
    NotHermitian,
    DimensionMismatch,
    NotCP,
    NotHermiticityPreserving,
    NotUnital,
    NotUnitalChannel,
    NotMonotone,
    NoConvergence,
    NotQubit,
    ToleranceConflict,
    PreconditionFailed,
    InvalidArgument,
    ParseError,
    InternalConsistency,
};

std::string_view error_kind_name(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above so
/// callers (and the CLI exit-code mapping) can branch without string matching.
class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string &what)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

  private:
    ErrorKind kind_;
};

}  // namespace cpanchor

#endif  // CPANCHOR_ERRORS_H
