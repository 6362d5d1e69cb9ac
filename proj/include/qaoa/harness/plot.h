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

#ifndef QAOA_HARNESS_PLOT_H
#define QAOA_HARNESS_PLOT_H

#include <string>
#include <string_view>
#include <vector>

#include "qaoa/objective.h"
#include "qaoa/statevec.h"

namespace qaoa::harness {

enum class TraceSeries { kEnergy, kParams };

/// "energy" or "params"; anything else is an InputError.
TraceSeries parse_trace_series(std::string_view name);

/// One <rect class="bar"> per observed bitstring in lexicographic order,
/// height proportional to probability. Bars for `solutions` get the extra
/// class "solution".
std::string plot_histogram(const Counts &counts, const std::vector<std::string> &solutions,
                           const std::string &title = "Outcome probabilities");

/// Energy: one polyline with a vertex per evaluation. Params: 2p polylines
/// labeled beta_i / gamma_i.
std::string plot_trace(const OptimizationTrace &trace, TraceSeries series, const std::string &title = "");

}  // namespace qaoa::harness

#endif
