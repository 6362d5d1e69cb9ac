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

#include "qaoa/graph.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <iomanip>
#include <set>
#include <sstream>
#include <utility>

#include "qaoa/error.h"

namespace qaoa {

MaxCutInstance::MaxCutInstance(int num_nodes, std::vector<Edge> edges) : num_nodes_(num_nodes), edges_(std::move(edges)) {
    if (num_nodes_ < 1) {
        throw InputError("node count must be positive, got " + std::to_string(num_nodes_));
    }
    std::set<std::pair<int, int>> seen;
    for (auto &e : edges_) {
        if (e.u < 0 || e.v < 0 || e.u >= num_nodes_ || e.v >= num_nodes_) {
            throw InputError("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") out of range for " +
                             std::to_string(num_nodes_) + " nodes");
        }
        if (e.u == e.v) {
            throw InputError("self loop on node " + std::to_string(e.u));
        }
        if (!std::isfinite(e.weight)) {
            throw InputError("edge weight must be finite");
        }
        if (e.u > e.v) {
            std::swap(e.u, e.v);
        }
        if (!seen.emplace(e.u, e.v).second) {
            throw InputError("duplicate edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ")");
        }
    }
}

double MaxCutInstance::total_weight() const {
    double total = 0.0;
    for (const auto &e : edges_) {
        total += e.weight;
    }
    return total;
}

bool MaxCutInstance::has_edge(int a, int b) const {
    if (a > b) {
        std::swap(a, b);
    }
    return std::any_of(edges_.begin(), edges_.end(), [&](const Edge &e) { return e.u == a && e.v == b; });
}

std::string bitstring_of(std::uint64_t index, int num_bits) {
    std::string bits(static_cast<std::size_t>(num_bits), '0');
    for (int i = 0; i < num_bits; ++i) {
        if ((index >> (num_bits - 1 - i)) & 1) {
            bits[static_cast<std::size_t>(i)] = '1';
        }
    }
    return bits;
}

std::uint64_t index_of(std::string_view bits) {
    if (bits.size() > 64) {
        throw InputError("bitstring longer than 64 characters");
    }
    std::uint64_t index = 0;
    for (char c : bits) {
        if (c != '0' && c != '1') {
            throw InputError("illegal bitstring character '" + std::string(1, c) + "'");
        }
        index = (index << 1) | static_cast<std::uint64_t>(c == '1');
    }
    return index;
}

std::string complement(std::string_view bits) {
    std::string out(bits);
    for (auto &c : out) {
        c = c == '0' ? '1' : '0';
    }
    return out;
}

double cut_value(const MaxCutInstance &instance, std::string_view assignment) {
    if (assignment.size() != static_cast<std::size_t>(instance.num_nodes())) {
        throw InputError("assignment length " + std::to_string(assignment.size()) + " does not match " +
                         std::to_string(instance.num_nodes()) + " nodes");
    }
    for (char c : assignment) {
        if (c != '0' && c != '1') {
            throw InputError("illegal assignment character '" + std::string(1, c) + "'");
        }
    }
    double value = 0.0;
    for (const auto &e : instance.edges()) {
        if (assignment[static_cast<std::size_t>(e.u)] != assignment[static_cast<std::size_t>(e.v)]) {
            value += e.weight;
        }
    }
    return value;
}

double cut_value(const MaxCutInstance &instance, std::uint64_t basis_index) {
    int n = instance.num_nodes();
    if (n < 64 && (basis_index >> n) != 0) {
        throw InputError("basis index " + std::to_string(basis_index) + " out of range for " + std::to_string(n) +
                         " nodes");
    }
    double value = 0.0;
    for (const auto &e : instance.edges()) {
        auto bu = (basis_index >> (n - 1 - e.u)) & 1;
        auto bv = (basis_index >> (n - 1 - e.v)) & 1;
        if (bu != bv) {
            value += e.weight;
        }
    }
    return value;
}

std::vector<double> cut_table(const MaxCutInstance &instance) {
    if (instance.num_nodes() > kMaxEnumerationNodes) {
        throw CapacityError("cut table limited to " + std::to_string(kMaxEnumerationNodes) + " nodes");
    }
    std::uint64_t size = std::uint64_t{1} << instance.num_nodes();
    std::vector<double> table(size);
    for (std::uint64_t k = 0; k < size; ++k) {
        table[k] = cut_value(instance, k);
    }
    return table;
}

MaxCutSolution brute_force_maxcut(const MaxCutInstance &instance) {
    int n = instance.num_nodes();
    if (n > kMaxEnumerationNodes) {
        throw CapacityError("brute force limited to " + std::to_string(kMaxEnumerationNodes) + " nodes, got " +
                            std::to_string(n));
    }
    MaxCutSolution best{-1.0, {}};
    std::vector<std::uint64_t> optima;
    std::uint64_t size = std::uint64_t{1} << n;
    for (std::uint64_t k = 0; k < size; ++k) {
        double value = cut_value(instance, k);
        if (value > best.value) {
            best.value = value;
            optima.clear();
        }
        if (value == best.value) {
            optima.push_back(k);
        }
    }
    // Ascending index order is lexicographic order under the MSB-first rule.
    best.optima.reserve(optima.size());
    for (auto k : optima) {
        best.optima.push_back(bitstring_of(k, n));
    }
    return best;
}

MaxCutInstance canonical_instance() {
    return MaxCutInstance(5, {{0, 3}, {0, 4}, {1, 3}, {1, 4}, {2, 3}, {2, 4}});
}

namespace {

std::string_view trim(std::string_view s) {
    auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string_view::npos) {
        return {};
    }
    auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

std::vector<std::string_view> split_ws(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) {
            ++i;
        }
        std::size_t j = i;
        while (j < s.size() && s[j] != ' ' && s[j] != '\t') {
            ++j;
        }
        if (j > i) {
            out.push_back(s.substr(i, j - i));
        }
        i = j;
    }
    return out;
}

int parse_int(std::string_view token, int line) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
        throw ParseError("expected integer, got '" + std::string(token) + "'", line);
    }
    return value;
}

double parse_double(std::string_view token, int line) {
    std::string buf(token);
    std::size_t used = 0;
    double value = 0.0;
    try {
        value = std::stod(buf, &used);
    } catch (const std::exception &) {
        used = 0;
    }
    if (used != buf.size() || !std::isfinite(value)) {
        throw ParseError("expected real weight, got '" + buf + "'", line);
    }
    return value;
}

}  // namespace

MaxCutInstance parse_edge_list(std::string_view text) {
    int line_no = 0;
    int num_nodes = -1;
    std::vector<Edge> edges;
    std::set<std::pair<int, int>> seen;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto nl = text.find('\n', pos);
        auto raw = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;
        auto hash = raw.find('#');
        auto line = trim(raw.substr(0, hash));
        if (line.empty()) {
            continue;
        }
        auto tokens = split_ws(line);
        if (num_nodes < 0) {
            if (tokens.size() != 1) {
                throw ParseError("first line must hold the node count", line_no);
            }
            num_nodes = parse_int(tokens[0], line_no);
            if (num_nodes < 1) {
                throw ParseError("node count must be positive", line_no);
            }
            continue;
        }
        if (tokens.size() != 2 && tokens.size() != 3) {
            throw ParseError("expected 'u v' or 'u v w'", line_no);
        }
        Edge e{parse_int(tokens[0], line_no), parse_int(tokens[1], line_no), 1.0};
        if (tokens.size() == 3) {
            e.weight = parse_double(tokens[2], line_no);
        }
        if (e.u < 0 || e.v < 0 || e.u >= num_nodes || e.v >= num_nodes) {
            throw ParseError("node index out of range [0, " + std::to_string(num_nodes) + ")", line_no);
        }
        if (e.u == e.v) {
            throw ParseError("self loop", line_no);
        }
        if (!seen.emplace(std::min(e.u, e.v), std::max(e.u, e.v)).second) {
            throw ParseError("duplicate edge", line_no);
        }
        edges.push_back(e);
    }
    if (num_nodes < 0) {
        throw ParseError("empty edge list: missing node count");
    }
    return MaxCutInstance(num_nodes, std::move(edges));
}

std::string serialize_edge_list(const MaxCutInstance &instance) {
    std::ostringstream out;
    out << instance.num_nodes() << '\n';
    for (const auto &e : instance.edges()) {
        out << e.u << ' ' << e.v;
        if (e.weight != 1.0) {
            out << ' ' << std::setprecision(17) << e.weight;
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace qaoa
