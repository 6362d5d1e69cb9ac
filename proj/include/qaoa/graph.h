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

#ifndef QAOA_GRAPH_H
#define QAOA_GRAPH_H

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace qaoa {

/// Undirected weighted edge, stored normalized so that u < v.
struct Edge {
    int u = 0;
    int v = 0;
    double weight = 1.0;

    bool operator==(const Edge &) const = default;
};

/// Largest node count accepted by the exhaustive oracle.
inline constexpr int kMaxEnumerationNodes = 24;

/// A MaxCut problem: node count plus an edge list. Edge order is preserved
/// (it fixes gate order in the ansatz).
class MaxCutInstance {
   public:
    /// Validates indices, rejects self loops and duplicates (after
    /// normalizing each pair to (min, max)).
    MaxCutInstance(int num_nodes, std::vector<Edge> edges);

    int num_nodes() const {
        return num_nodes_;
    }
    const std::vector<Edge> &edges() const {
        return edges_;
    }
    double total_weight() const;
    bool has_edge(int a, int b) const;

    bool operator==(const MaxCutInstance &) const = default;

   private:
    int num_nodes_;
    std::vector<Edge> edges_;
};

struct Cut {
    std::string assignment;
    double value = 0.0;
};

struct MaxCutSolution {
    double value = 0.0;
    /// Every assignment attaining `value`, in lexicographic order.
    std::vector<std::string> optima;
};

// Bit ordering used everywhere: character i of a bitstring is node i, and
// node 0 is the most significant bit of the basis-state index.
std::string bitstring_of(std::uint64_t index, int num_bits);
std::uint64_t index_of(std::string_view bits);
std::string complement(std::string_view bits);

double cut_value(const MaxCutInstance &instance, std::string_view assignment);
double cut_value(const MaxCutInstance &instance, std::uint64_t basis_index);

/// Cut value of every basis state, indexed by basis index (size 2^n).
std::vector<double> cut_table(const MaxCutInstance &instance);

MaxCutSolution brute_force_maxcut(const MaxCutInstance &instance);

/// Five-node K_{2,3} across {0,1,2} | {3,4}; maximum cut 6 at 00011/11100.
MaxCutInstance canonical_instance();

MaxCutInstance parse_edge_list(std::string_view text);
std::string serialize_edge_list(const MaxCutInstance &instance);

}  // namespace qaoa

#endif
