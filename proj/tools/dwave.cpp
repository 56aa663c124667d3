#include "dwave/experiments.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>

int main(int argc, char** argv) {
    CLI::App app{"Damped wave decay and blow-up experiments"};
    app.require_subcommand(1);

    std::string config_path;
    int threads = 1;
    auto* run = app.add_subcommand("run", "Run the experiment described by a key=value config file");
    run->add_option("config", config_path, "Config file")->required();
    run->add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : dwave::exit_config;
    }

    dwave::RunOptions options;
    options.threads = threads;
    if (const char* out = std::getenv("DWAVE_OUT"); out && *out) options.out_dir = out;
    return dwave::run_config_file(config_path, options, std::cout);
}
