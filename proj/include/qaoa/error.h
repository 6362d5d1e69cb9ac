// Copyright 2026 The QAOA Workbench Authors
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

#ifndef QAOA_ERROR_H
#define QAOA_ERROR_H

#include <stdexcept>
#include <string>

namespace qaoa {

/// Violated precondition on caller-supplied data (bad index, bad bitstring).
class InputError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// Request exceeds a hard size limit (enumeration bound, statevector cap).
class CapacityError : public std::length_error {
   public:
    using std::length_error::length_error;
};

/// Malformed text input. Carries the 1-based line number when known.
class ParseError : public std::invalid_argument {
   public:
    ParseError(const std::string &what, int line = 0)
        : std::invalid_argument(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {
    }
    int line() const noexcept {
        return line_;
    }

   private:
    int line_;
};

/// Invalid optimizer or experiment configuration.
class ConfigError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace qaoa

#endif
