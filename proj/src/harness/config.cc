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

#include "qaoa/harness/config.h"

#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

#include "json.hpp"
#include "qaoa/error.h"

namespace qaoa::harness {

using nlohmann::json;

namespace {

const std::set<std::string> kTopLevelFields = {
    "version", "graph",    "graph_text", "p",    "method", "init",    "restarts", "shots",  "mode",
    "noise",   "max_evals", "fd_step",   "durations", "out", "seed", "threads", "sweep",
};
const std::set<std::string> kNoiseFields = {
    "preset", "p1q", "p2q", "p_readout", "epsilon_coherent", "sigma_dephase", "twirling", "dd", "schedule",
};
const std::set<std::string> kDurationFields = {"single_qubit", "cnot"};
const std::set<std::string> kSweepFields = {"p", "method", "noise"};

[[noreturn]] void fail(const std::string &field, const std::string &what) {
    throw ConfigError("config field '" + field + "': " + what);
}

void reject_unknown(const json &object, const std::set<std::string> &known, const std::string &prefix) {
    for (const auto &[key, value] : object.items()) {
        if (!known.contains(key)) {
            fail(prefix + key, "unknown field");
        }
    }
}

std::string as_string(const json &v, const std::string &field) {
    if (!v.is_string()) {
        fail(field, "expected a string");
    }
    return v.get<std::string>();
}

double as_number(const json &v, const std::string &field) {
    if (!v.is_number()) {
        fail(field, "expected a number");
    }
    return v.get<double>();
}

bool as_bool(const json &v, const std::string &field) {
    if (!v.is_boolean()) {
        fail(field, "expected true or false");
    }
    return v.get<bool>();
}

std::int64_t as_int(const json &v, const std::string &field, std::int64_t lo, std::int64_t hi) {
    if (!v.is_number_integer()) {
        fail(field, "expected an integer");
    }
    const bool too_big = v.is_number_unsigned() && v.get<std::uint64_t>() > static_cast<std::uint64_t>(hi);
    if (too_big || v.get<std::int64_t>() < lo || v.get<std::int64_t>() > hi) {
        fail(field, "must be in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
    }
    return v.get<std::int64_t>();
}

std::uint64_t as_u64(const json &v, const std::string &field) {
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0)) {
        fail(field, "expected a non-negative integer");
    }
    return v.get<std::uint64_t>();
}

ObjectiveMode parse_mode(const std::string &name) {
    if (name == "exact") {
        return ObjectiveMode::kExact;
    }
    if (name == "sampled") {
        return ObjectiveMode::kSampled;
    }
    if (name == "noisy") {
        return ObjectiveMode::kNoisy;
    }
    fail("mode", "expected exact, sampled or noisy, got '" + name + "'");
}

Method method_field(const json &v, const std::string &field) {
    try {
        return parse_method(as_string(v, field));
    } catch (const ConfigError &e) {
        fail(field, e.what());
    }
}

NoiseConfig preset_field(const std::string &name, const std::string &field) {
    try {
        return NoiseConfig::preset(name);
    } catch (const InputError &e) {
        fail(field, e.what());
    }
}

void parse_noise(const json &v, ExperimentConfig &config) {
    if (v.is_string()) {
        config.noise_name = v.get<std::string>();
        config.noise = preset_field(config.noise_name, "noise");
        return;
    }
    if (!v.is_object()) {
        fail("noise", "expected a preset name or an object");
    }
    reject_unknown(v, kNoiseFields, "noise.");
    NoiseConfig noise;
    std::string name = "custom";
    if (v.contains("preset")) {
        name = as_string(v["preset"], "noise.preset");
        noise = preset_field(name, "noise.preset");
    }
    bool overridden = false;
    auto number = [&](const char *key, double &target) {
        if (v.contains(key)) {
            target = as_number(v[key], std::string("noise.") + key);
            overridden = true;
        }
    };
    number("p1q", noise.p1q);
    number("p2q", noise.p2q);
    number("p_readout", noise.p_readout);
    number("epsilon_coherent", noise.epsilon_coherent);
    number("sigma_dephase", noise.sigma_dephase);
    if (v.contains("twirling")) {
        noise.twirling = as_bool(v["twirling"], "noise.twirling");
        overridden = true;
    }
    if (v.contains("dd")) {
        overridden = true;
        if (v["dd"].is_null()) {
            noise.dd.reset();
        } else {
            try {
                noise.dd = parse_dd_sequence(as_string(v["dd"], "noise.dd"));
            } catch (const InputError &e) {
                fail("noise.dd", e.what());
            }
        }
    }
    if (v.contains("schedule")) {
        overridden = true;
        try {
            noise.schedule = parse_schedule_policy(as_string(v["schedule"], "noise.schedule"));
        } catch (const InputError &e) {
            fail("noise.schedule", e.what());
        }
    }
    try {
        noise.validate();
    } catch (const InputError &e) {
        fail("noise", e.what());
    }
    config.noise = noise;
    config.noise_name = overridden ? "custom" : name;
}

void parse_sweep(const json &v, SweepAxes &axes) {
    if (!v.is_object()) {
        fail("sweep", "expected an object");
    }
    reject_unknown(v, kSweepFields, "sweep.");
    auto list = [&](const char *key) -> const json & {
        const json &a = v[key];
        if (!a.is_array()) {
            fail(std::string("sweep.") + key, "expected an array");
        }
        return a;
    };
    if (v.contains("p")) {
        for (const auto &x : list("p")) {
            axes.p.push_back(static_cast<int>(as_int(x, "sweep.p", 0, 64)));
        }
    }
    if (v.contains("method")) {
        for (const auto &x : list("method")) {
            axes.method.push_back(method_field(x, "sweep.method"));
        }
    }
    if (v.contains("noise")) {
        for (const auto &x : list("noise")) {
            const std::string name = as_string(x, "sweep.noise");
            preset_field(name, "sweep.noise");
            axes.noise.push_back(name);
        }
    }
    if (axes.cell_count() > kMaxSweepCells) {
        fail("sweep", "cross product has " + std::to_string(axes.cell_count()) + " cells (limit " +
                          std::to_string(kMaxSweepCells) + ")");
    }
}

json noise_json(const NoiseConfig &noise) {
    json j = json::object();
    j["p1q"] = noise.p1q;
    j["p2q"] = noise.p2q;
    j["p_readout"] = noise.p_readout;
    j["epsilon_coherent"] = noise.epsilon_coherent;
    j["sigma_dephase"] = noise.sigma_dephase;
    j["twirling"] = noise.twirling;
    j["dd"] = noise.dd ? json(std::string(dd_sequence_name(*noise.dd))) : json(nullptr);
    j["schedule"] = std::string(schedule_policy_name(noise.schedule));
    return j;
}

}  // namespace

std::string_view objective_mode_name(ObjectiveMode mode) {
    switch (mode) {
        case ObjectiveMode::kExact:
            return "exact";
        case ObjectiveMode::kSampled:
            return "sampled";
        case ObjectiveMode::kNoisy:
            return "noisy";
    }
    return "?";
}

std::size_t SweepAxes::cell_count() const {
    return std::max<std::size_t>(p.size(), 1) * std::max<std::size_t>(method.size(), 1) *
           std::max<std::size_t>(noise.size(), 1);
}

void ExperimentConfig::validate() const {
    if (p < 0 || p > 64) {
        fail("p", "must be in [0, 64]");
    }
    if (init.kind == InitSpec::Kind::kPaperP5 && p != 5) {
        fail("init", "preset 'paper-p5' requires p = 5 (got p = " + std::to_string(p) + ")");
    }
    if (init.kind == InitSpec::Kind::kExplicit && init.theta.size() != 2 * static_cast<std::size_t>(p)) {
        fail("init", "explicit angles need length 2p = " + std::to_string(2 * p) + " (got " +
                         std::to_string(init.theta.size()) + ")");
    }
    for (double x : init.theta) {
        if (!std::isfinite(x)) {
            fail("init", "angles must be finite");
        }
    }
    if (restarts < 1) {
        fail("restarts", "must be >= 1");
    }
    if (restarts > 1 && init.kind != InitSpec::Kind::kRandom) {
        fail("restarts", "more than one restart requires init 'random'");
    }
    if (shots == 0) {
        fail("shots", "must be positive");
    }
    if (p > 0 && max_evals != 0 && max_evals < 2 * static_cast<std::size_t>(p)) {
        fail("max_evals", "must be 0 or at least the parameter count 2p");
    }
    if (fd_step && !(*fd_step > 0.0 && std::isfinite(*fd_step))) {
        fail("fd_step", "must be positive");
    }
    if (!(durations.single_qubit >= 0.0) || !(durations.cnot >= 0.0) || !std::isfinite(durations.single_qubit) ||
        !std::isfinite(durations.cnot)) {
        fail("durations", "must be finite and non-negative");
    }
    if (threads < 0) {
        fail("threads", "must be >= 0");
    }
    if (out.empty()) {
        fail("out", "must not be empty");
    }
    try {
        noise.validate();
    } catch (const InputError &e) {
        fail("noise", e.what());
    }
}

MaxCutInstance ExperimentConfig::load_instance() const {
    if (graph_text) {
        return parse_edge_list(*graph_text);
    }
    if (graph == "canonical") {
        return canonical_instance();
    }
    std::ifstream in(graph);
    if (!in) {
        throw InputError("cannot open graph file '" + graph + "'");
    }
    std::ostringstream text;
    text << in.rdbuf();
    try {
        return parse_edge_list(text.str());
    } catch (const ParseError &e) {
        throw ParseError(graph + ": " + e.what());
    }
}

std::string ExperimentConfig::canonical_json() const {
    json j = json::object();
    j["version"] = kSchemaVersion;
    if (graph_text) {
        j["graph_text"] = *graph_text;
    } else {
        j["graph"] = graph;
    }
    j["p"] = p;
    j["method"] = std::string(method_name(method));
    switch (init.kind) {
        case InitSpec::Kind::kPaperP5:
            j["init"] = "paper-p5";
            break;
        case InitSpec::Kind::kRandom:
            j["init"] = "random";
            break;
        case InitSpec::Kind::kExplicit:
            j["init"] = init.theta;
            break;
    }
    j["restarts"] = restarts;
    j["shots"] = shots;
    j["mode"] = std::string(objective_mode_name(mode));
    j["noise"] = noise_json(noise);
    j["max_evals"] = max_evals;
    j["fd_step"] = fd_step ? json(*fd_step) : json(nullptr);
    j["durations"] = {{"single_qubit", durations.single_qubit}, {"cnot", durations.cnot}};
    j["seed"] = seed;
    return j.dump();
}

std::uint64_t fnv1a64(std::string_view data) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string ExperimentConfig::hash() const {
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016" PRIx64, fnv1a64(canonical_json()));
    return buf;
}

ExperimentConfig parse_config(std::string_view json_text, const std::filesystem::path &base_dir) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error &e) {
        throw ConfigError(std::string("config is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) {
        throw ConfigError("config must be a JSON object");
    }
    reject_unknown(j, kTopLevelFields, "");

    ExperimentConfig c;
    if (j.contains("version") && as_int(j["version"], "version", 0, 1000) != kSchemaVersion) {
        fail("version", "unsupported schema version (expected " + std::to_string(kSchemaVersion) + ")");
    }
    if (j.contains("graph") && j.contains("graph_text")) {
        fail("graph", "give either 'graph' or 'graph_text', not both");
    }
    if (j.contains("graph")) {
        c.graph = as_string(j["graph"], "graph");
        if (c.graph != "canonical" && !base_dir.empty() && std::filesystem::path(c.graph).is_relative()) {
            c.graph = (base_dir / c.graph).string();
        }
    }
    if (j.contains("graph_text")) {
        c.graph_text = as_string(j["graph_text"], "graph_text");
    }
    if (j.contains("p")) {
        c.p = static_cast<int>(as_int(j["p"], "p", 0, 64));
    }
    if (j.contains("method")) {
        c.method = method_field(j["method"], "method");
    }
    if (j.contains("init")) {
        const json &v = j["init"];
        if (v.is_array()) {
            c.init.kind = InitSpec::Kind::kExplicit;
            for (const auto &x : v) {
                c.init.theta.push_back(as_number(x, "init"));
            }
        } else {
            const std::string name = as_string(v, "init");
            if (name == "paper-p5") {
                c.init.kind = InitSpec::Kind::kPaperP5;
            } else if (name == "random") {
                c.init.kind = InitSpec::Kind::kRandom;
            } else {
                fail("init", "expected 'paper-p5', 'random' or an array of angles, got '" + name + "'");
            }
        }
    }
    if (j.contains("restarts")) {
        c.restarts = static_cast<int>(as_int(j["restarts"], "restarts", 1, 1000));
    }
    if (j.contains("shots")) {
        c.shots = as_u64(j["shots"], "shots");
    }
    if (j.contains("mode")) {
        c.mode = parse_mode(as_string(j["mode"], "mode"));
    }
    if (j.contains("noise")) {
        parse_noise(j["noise"], c);
    }
    if (j.contains("max_evals")) {
        c.max_evals = as_u64(j["max_evals"], "max_evals");
    }
    if (j.contains("fd_step")) {
        c.fd_step = as_number(j["fd_step"], "fd_step");
    }
    if (j.contains("durations")) {
        const json &d = j["durations"];
        if (!d.is_object()) {
            fail("durations", "expected an object");
        }
        reject_unknown(d, kDurationFields, "durations.");
        if (d.contains("single_qubit")) {
            c.durations.single_qubit = as_number(d["single_qubit"], "durations.single_qubit");
        }
        if (d.contains("cnot")) {
            c.durations.cnot = as_number(d["cnot"], "durations.cnot");
        }
    }
    if (j.contains("out")) {
        c.out = as_string(j["out"], "out");
    }
    if (j.contains("seed")) {
        c.seed = as_u64(j["seed"], "seed");
    }
    if (j.contains("threads")) {
        c.threads = static_cast<int>(as_int(j["threads"], "threads", 0, 1024));
    }
    if (j.contains("sweep")) {
        parse_sweep(j["sweep"], c.sweep);
    }
    c.validate();
    return c;
}

ExperimentConfig load_config(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw InputError("cannot open config file '" + path.string() + "'");
    }
    std::ostringstream text;
    text << in.rdbuf();
    try {
        return parse_config(text.str(), path.parent_path());
    } catch (const ConfigError &e) {
        throw ConfigError(path.string() + ": " + e.what());
    }
}

}  // namespace qaoa::harness
