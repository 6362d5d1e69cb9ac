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

#include "qaoa/harness/io.h"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "qaoa/error.h"

namespace qaoa::harness {

using nlohmann::ordered_json;

std::string format_double(double x) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.9g", x);
    return buf;
}

std::string format_counts_json(const CountsFile &file) {
    ordered_json j;
    j["shots"] = file.counts.total();
    ordered_json counts = ordered_json::object();
    for (const auto &[bits, n] : file.counts.entries()) {
        counts[bits] = n;
    }
    j["counts"] = std::move(counts);
    j["config_hash"] = file.config_hash;
    j["seed"] = file.seed;
    if (!file.optima.empty()) {
        j["optima"] = file.optima;
    }
    return j.dump(2) + "\n";
}

CountsFile parse_counts_json(const std::string &text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const ordered_json::parse_error &e) {
        throw ParseError(std::string("counts file is not valid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("counts") || !j["counts"].is_object()) {
        throw ParseError("counts file needs a 'counts' object");
    }
    const auto &counts = j["counts"];
    int bits = -1;
    for (const auto &[key, value] : counts.items()) {
        if (bits < 0) {
            bits = static_cast<int>(key.size());
        }
        if (static_cast<int>(key.size()) != bits) {
            throw ParseError("counts keys have different lengths");
        }
    }
    CountsFile out;
    out.counts = Counts(bits < 0 ? 0 : bits);
    for (const auto &[key, value] : counts.items()) {
        if (!value.is_number_unsigned() && !(value.is_number_integer() && value.get<std::int64_t>() >= 0)) {
            throw ParseError("count for '" + key + "' is not a non-negative integer");
        }
        try {
            out.counts.add(key, value.get<std::uint64_t>());
        } catch (const InputError &e) {
            throw ParseError(e.what());
        }
    }
    if (j.contains("shots")) {
        if (!j["shots"].is_number_integer() || j["shots"].get<std::uint64_t>() != out.counts.total()) {
            throw ParseError("'shots' does not match the sum of counts");
        }
    }
    if (j.contains("config_hash") && j["config_hash"].is_string()) {
        out.config_hash = j["config_hash"].get<std::string>();
    }
    if (j.contains("seed") && j["seed"].is_number_integer()) {
        out.seed = j["seed"].get<std::uint64_t>();
    }
    if (j.contains("optima")) {
        if (!j["optima"].is_array()) {
            throw ParseError("'optima' must be an array of bitstrings");
        }
        for (const auto &b : j["optima"]) {
            if (!b.is_string()) {
                throw ParseError("'optima' must be an array of bitstrings");
            }
            out.optima.push_back(b.get<std::string>());
        }
    }
    return out;
}

std::string format_trace_csv(const OptimizationTrace &trace, int depth) {
    std::string out = "eval,energy";
    for (int i = 1; i <= depth; ++i) {
        out += ",beta_" + std::to_string(i);
    }
    for (int i = 1; i <= depth; ++i) {
        out += ",gamma_" + std::to_string(i);
    }
    out += '\n';
    for (const auto &r : trace.records) {
        if (r.theta.size() != 2 * static_cast<std::size_t>(depth)) {
            throw InputError("trace record has " + std::to_string(r.theta.size()) + " angles, expected " +
                             std::to_string(2 * depth));
        }
        out += std::to_string(r.eval);
        out += ',';
        out += format_double(r.energy);
        for (double x : r.theta) {
            out += ',';
            out += format_double(x);
        }
        out += '\n';
    }
    return out;
}

namespace {

std::vector<std::string> split_commas(const std::string &line) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream in(line);
    while (std::getline(in, cell, ',')) {
        cells.push_back(cell);
    }
    if (!line.empty() && line.back() == ',') {
        cells.emplace_back();
    }
    return cells;
}

double parse_number(const std::string &cell, int line) {
    try {
        std::size_t used = 0;
        const double x = std::stod(cell, &used);
        if (used == cell.size()) {
            return x;
        }
    } catch (const std::exception &) {
    }
    throw ParseError("bad number '" + cell + "'", line);
}

}  // namespace

OptimizationTrace parse_trace_csv(const std::string &text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    if (!std::getline(in, line)) {
        throw ParseError("empty trace file");
    }
    ++line_no;
    const auto header = split_commas(line);
    if (header.size() < 2 || header[0] != "eval" || header[1] != "energy" || header.size() % 2 != 0) {
        throw ParseError("trace header must be eval,energy,beta_1..,gamma_1..", line_no);
    }
    const std::size_t width = header.size();
    OptimizationTrace trace;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) {
            continue;
        }
        const auto cells = split_commas(line);
        if (cells.size() != width) {
            throw ParseError("expected " + std::to_string(width) + " columns, got " + std::to_string(cells.size()),
                             line_no);
        }
        TraceRecord r;
        std::uint64_t index = 0;
        const auto [ptr, ec] = std::from_chars(cells[0].data(), cells[0].data() + cells[0].size(), index);
        if (ec != std::errc() || ptr != cells[0].data() + cells[0].size()) {
            throw ParseError("bad evaluation index '" + cells[0] + "'", line_no);
        }
        if (index != trace.records.size()) {
            throw ParseError("evaluation indices must count up from 0", line_no);
        }
        r.eval = index;
        r.energy = parse_number(cells[1], line_no);
        for (std::size_t k = 2; k < width; ++k) {
            r.theta.push_back(parse_number(cells[k], line_no));
        }
        trace.records.push_back(std::move(r));
    }
    return trace;
}

std::string read_text_file(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot read '" + path.string() + "'");
    }
    std::ostringstream text;
    text << in.rdbuf();
    return text.str();
}

void write_text_file(const std::filesystem::path &path, const std::string &text) {
    if (path.has_parent_path()) {
        std::error_code ec;
        std::filesystem::create_directories(path.parent_path(), ec);
        if (ec) {
            throw std::runtime_error("cannot create directory '" + path.parent_path().string() + "': " + ec.message());
        }
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw std::runtime_error("cannot write '" + path.string() + "'");
    }
    out << text;
    if (!out.flush()) {
        throw std::runtime_error("write failed for '" + path.string() + "'");
    }
}

}  // namespace qaoa::harness
