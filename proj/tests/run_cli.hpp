#pragma once

// Drives the built CLI binary; AHDET_CLI_PATH is injected by CMake.

#include <cstdio>
#include <stdexcept>
#include <string>
#include <sys/wait.h>

namespace ahdet::test {

struct CliResult {
    int exit_code = -1;
    std::string output;  // stdout and stderr merged
};

inline CliResult run_cli(const std::string& args) {
    const std::string command = std::string(AHDET_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(command.c_str(), "r");
    if (!pipe)
        throw std::runtime_error("popen failed: " + command);
    CliResult result;
    char buffer[4096];
    std::size_t got;
    while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0)
        result.output.append(buffer, got);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

}  // namespace ahdet::test
