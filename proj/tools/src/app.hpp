#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "config.hpp"

namespace kdsim::cli {

enum ExitCode : int {
    exit_ok = 0,
    exit_failure = 1,
    exit_validation = 2,
    exit_numerical = 3,
};

struct OutputFile {
    std::string name;     // file name relative to the output directory
    std::string content;
};

/// Everything a command produces. Nothing touches the disk until the whole
/// command has succeeded.
struct CommandOutput {
    json results = json::object();
    std::vector<OutputFile> files;
};

CommandOutput run_command(const RunConfig& cfg);

/// Metadata document written next to the data files.
json metadata(const RunConfig& cfg, const CommandOutput& out);

/// Full entry point. `default_output_dir` is used when neither the config
/// nor the flags name a directory (main passes KDSIM_OUTPUT_DIR).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const std::string& default_output_dir = ".");

}  // namespace kdsim::cli
