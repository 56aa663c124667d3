#pragma once

// Config-driven experiment runner behind the command-line tool.

#include "dwave/config.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace dwave {

enum ExitCode { exit_pass = 0, exit_fail = 1, exit_config = 2 };

struct RunOptions {
    int threads = 1;
    std::optional<std::string> out_dir;  // overrides output.dir
};

const std::vector<std::string>& experiment_kinds();

// Validates the whole config, then writes manifest.txt, the experiment's CSV
// files and summary.txt into the output directory.
int run_experiment(Config config, const RunOptions& options, std::ostream& log);
int run_config_file(const std::string& path, const RunOptions& options, std::ostream& log);

}  // namespace dwave
