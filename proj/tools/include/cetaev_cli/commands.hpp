#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>

namespace cetaev::cli {

enum ExitCode : int { kOk = 0, kError = 1, kRefused = 2, kCheckFailed = 3 };

struct RunConfig {
    std::string subcommand;
    std::optional<std::string> corpus;
    std::optional<std::string> input;
    std::optional<unsigned> s;
    std::optional<double> eps;
    std::size_t samples = 0;
    double zero_tol = 1e-9;
    double neg_margin = 1e-6;
    double margin = 1e-6;
    unsigned seeds = 10;
    std::optional<std::string> out_dir;
    bool json = false;
    bool force = false;
    bool no_timestamp = false;
    std::optional<std::string> item;
};

/// Throws cetaev::Error on an invalid combination of options.
void validate(const RunConfig& config);

int cmd_analyze(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_trajectory(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_verify_paper(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_catalog(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Dispatches on config.subcommand, mapping exceptions to kError with a diagnostic on err.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace cetaev::cli
