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

#ifndef QAOA_HARNESS_IO_H
#define QAOA_HARNESS_IO_H

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "qaoa/objective.h"
#include "qaoa/statevec.h"

namespace qaoa::harness {

/// Counts file contents: histogram plus provenance.
struct CountsFile {
    Counts counts{0};
    std::string config_hash;
    std::uint64_t seed = 0;
    /// Brute-force optima of the instance, when known.
    std::vector<std::string> optima;
};

std::string format_counts_json(const CountsFile &file);
CountsFile parse_counts_json(const std::string &text);

/// Header `eval,energy,beta_1..beta_p,gamma_1..gamma_p`; floats as %.9g.
std::string format_trace_csv(const OptimizationTrace &trace, int depth);
OptimizationTrace parse_trace_csv(const std::string &text);

/// Whole-file helpers. Failures throw std::runtime_error naming the path.
std::string read_text_file(const std::filesystem::path &path);
void write_text_file(const std::filesystem::path &path, const std::string &text);

/// %.9g rendering used by every CSV column.
std::string format_double(double x);

}  // namespace qaoa::harness

#endif
