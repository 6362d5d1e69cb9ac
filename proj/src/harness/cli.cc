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

#include "qaoa/harness/cli.h"

#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "qaoa/error.h"
#include "qaoa/harness/config.h"
#include "qaoa/harness/experiment.h"
#include "qaoa/harness/io.h"
#include "qaoa/harness/plot.h"

namespace qaoa::harness {

namespace {

struct RunFlags {
    std::string config;
    std::optional<std::uint64_t> seed;
    std::optional<std::string> out;
    std::optional<int> threads;
};

void add_run_flags(CLI::App &cmd, RunFlags &flags) {
    cmd.add_option("--config", flags.config, "Experiment config (JSON, schema v1)")->required();
    cmd.add_option("--seed", flags.seed, "Override the master seed");
    cmd.add_option("--out", flags.out, "Override the output directory");
    cmd.add_option("--threads", flags.threads, "Worker threads (0 = all cores); never changes results")
        ->check(CLI::NonNegativeNumber);
}

ExperimentConfig resolve(const RunFlags &flags) {
    ExperimentConfig config = load_config(flags.config);
    if (flags.seed) {
        config.seed = *flags.seed;
    }
    if (flags.out) {
        config.out = *flags.out;
    }
    if (flags.threads) {
        config.threads = *flags.threads;
    }
    config.validate();
    return config;
}

MaxCutInstance load_graph(const std::string &graph) {
    ExperimentConfig c;
    c.graph = graph;
    return c.load_instance();
}

std::string join(const std::vector<std::string> &items) {
    std::string out;
    for (const auto &s : items) {
        out += (out.empty() ? "" : " ") + s;
    }
    return out;
}

void print_summary(std::ostream &out, const RunArtifacts &art) {
    const auto &s = art.summary;
    out << "method " << s.method << ", p=" << s.p << ", noise " << s.noise << "\n";
    out << "best energy " << format_double(s.best_energy) << " (" << status_name(s.status) << ", " << s.evals_used
        << " evaluations)\n";
    out << "final energy " << format_double(s.final_energy) << " over " << s.shots << " shots\n";
    out << "most frequent " << join(s.best_bitstrings) << "\n";
    out << "approx ratio " << format_double(s.approx_ratio) << ", ground-pair probability "
        << format_double(s.ground_pair_prob) << "\n";
    out << "wrote " << art.counts_path.string() << " " << art.trace_path.string() << " " << art.summary_path.string()
        << "\n";
}

}  // namespace

int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"QAOA MaxCut workbench"};
    app.name("qaoa");
    app.require_subcommand(1);

    RunFlags solve_flags, sweep_flags;
    auto *solve = app.add_subcommand("solve", "Optimize and sample one experiment");
    add_run_flags(*solve, solve_flags);
    auto *sweep = app.add_subcommand("sweep", "Run the cross product of the config's sweep axes");
    add_run_flags(*sweep, sweep_flags);

    std::string bf_graph = "canonical";
    auto *brute = app.add_subcommand("brute-force", "Print the maximum cut and every optimal assignment");
    brute->add_option("--graph", bf_graph, "'canonical' or an edge-list file");

    std::string plot_in, plot_out, plot_series = "energy", plot_graph = "canonical", plot_title;
    auto *plot = app.add_subcommand("plot", "Render counts (.json) or a trace (.csv) as SVG");
    plot->add_option("--in", plot_in, "counts.json or trace.csv")->required();
    plot->add_option("--out", plot_out, "Output SVG path")->required();
    plot->add_option("--series", plot_series, "Trace series: energy or params")
        ->check(CLI::IsMember({"energy", "params"}));
    plot->add_option("--graph", plot_graph, "Graph used to highlight optima when the counts file has none");
    plot->add_option("--title", plot_title, "Plot title");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp &e) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << "\n" << app.help();
        return kExitUsage;
    }

    try {
        if (solve->parsed()) {
            const auto art = run_experiment(resolve(solve_flags));
            print_summary(out, art);
        } else if (sweep->parsed()) {
            const auto result = run_sweep(resolve(sweep_flags));
            out << format_sweep_csv(result.rows);
            out << "wrote " << result.csv_path.string() << "\n";
        } else if (brute->parsed()) {
            const auto sol = brute_force_maxcut(load_graph(bf_graph));
            char value[32];
            std::snprintf(value, sizeof(value), "%g", sol.value);
            out << value << " " << join(sol.optima) << "\n";
        } else if (plot->parsed()) {
            const std::filesystem::path in(plot_in);
            const std::string text = read_text_file(in);
            std::string svg;
            if (in.extension() == ".json") {
                auto file = parse_counts_json(text);
                if (file.optima.empty()) {
                    const auto graph = load_graph(plot_graph);
                    if (graph.num_nodes() == file.counts.num_bits()) {
                        file.optima = brute_force_maxcut(graph).optima;
                    }
                }
                svg = plot_histogram(file.counts, file.optima, plot_title.empty() ? "Outcome probabilities" : plot_title);
            } else {
                svg = plot_trace(parse_trace_csv(text), parse_trace_series(plot_series), plot_title);
            }
            write_text_file(plot_out, svg);
            out << "wrote " << plot_out << "\n";
        }
    } catch (const ConfigError &e) {
        err << "config error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const InputError &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return kExitRuntime;
    }
    return kExitOk;
}

}  // namespace qaoa::harness
