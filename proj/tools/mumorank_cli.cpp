/*
 * Copyright 2026 The mumorank Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include <mumorank/mumorank.hpp>

namespace {

// Exit codes: 0 success, 1 I/O or internal failure, 2 input schema error,
// 3 graph validation failure, 4 non-convergence, 5 degenerate input.
constexpr int kExitIo = 1;
constexpr int kExitSchema = 2;
constexpr int kExitValidation = 3;
constexpr int kExitConvergence = 4;
constexpr int kExitDegenerate = 5;

struct CommonOptions {
    std::string graph_path;
    std::string config_path;
    std::string out_path;
    bool allow_multi = false;
};

void add_common(CLI::App* cmd, CommonOptions& options) {
    cmd->add_option("graph", options.graph_path, "hyperedge CSV file")->required();
    cmd->add_option("--config", options.config_path, "JSON config file");
    cmd->add_option("--out", options.out_path, "write the report here instead of stdout");
    cmd->add_flag("--allow-multi", options.allow_multi, "keep duplicate hyperedges");
}

int deliver(const std::string& report, const std::string& out_path) {
    if (out_path.empty())
        std::cout << report;
    else
        mumorank::write_file(out_path, report);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"rankings and outflow bounds for multimodal hypergraphs"};
    app.require_subcommand(1);

    CommonOptions validate_options;
    CLI::App* validate = app.add_subcommand("validate", "check a hyperedge CSV");
    add_common(validate, validate_options);

    CommonOptions rank_options;
    CLI::App* rank = app.add_subcommand("rank", "compute node and hyperedge ranks");
    add_common(rank, rank_options);

    CommonOptions bounds_options;
    bool factored_equal = false;
    CLI::App* bounds = app.add_subcommand("bounds", "evaluate outflow bounds");
    add_common(bounds, bounds_options);
    bounds->add_flag("--factored-equal", factored_equal,
                     "also report the factored form of the refined equal-damping bound");

    CommonOptions simulate_options;
    std::uint64_t steps = 1000000;
    std::uint64_t seed = 42;
    CLI::App* simulate = app.add_subcommand("simulate", "Monte Carlo check of the ranking");
    add_common(simulate, simulate_options);
    simulate->add_option("--steps", steps, "counted steps after burn-in");
    simulate->add_option("--seed", seed, "master seed for the walker streams");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& help) {
        return app.exit(help);
    } catch (const CLI::ParseError& error) {
        app.exit(error);
        return kExitSchema;
    }

    try {
        if (*validate)
            return deliver(mumorank::cmd_validate(validate_options.graph_path,
                                                  validate_options.config_path,
                                                  validate_options.allow_multi),
                           validate_options.out_path);
        if (*rank)
            return deliver(mumorank::cmd_rank(rank_options.graph_path, rank_options.config_path,
                                              rank_options.allow_multi),
                           rank_options.out_path);
        if (*bounds)
            return deliver(mumorank::cmd_bounds(bounds_options.graph_path,
                                                bounds_options.config_path,
                                                bounds_options.allow_multi, factored_equal),
                           bounds_options.out_path);
        if (*simulate)
            return deliver(mumorank::cmd_simulate(simulate_options.graph_path,
                                                  simulate_options.config_path, steps, seed,
                                                  simulate_options.allow_multi),
                           simulate_options.out_path);
    } catch (const mumorank::ValidationError& error) {
        std::cerr << error.what() << "\n";
        return kExitValidation;
    } catch (const mumorank::ConvergenceError& error) {
        std::cerr << error.what() << " (residual " << error.residual << " after "
                  << error.iterations << " iterations)\n";
        return kExitConvergence;
    } catch (const mumorank::DegenerateError& error) {
        std::cerr << error.what() << "\n";
        return kExitDegenerate;
    } catch (const mumorank::SchemaError& error) {
        std::cerr << error.what() << "\n";
        return kExitSchema;
    } catch (const mumorank::IoError& error) {
        std::cerr << error.what() << "\n";
        return kExitIo;
    } catch (const std::exception& error) {
        std::cerr << error.what() << "\n";
        return kExitIo;
    }
    return 0;
}
