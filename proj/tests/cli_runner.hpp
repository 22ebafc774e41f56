#pragma once

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace cliffex::testing {

struct CommandResult {
    int exit_code;
    std::string out;
};

/// Runs the CLI with the given argument string; stdout captured, stderr discarded.
inline CommandResult run_cli(const std::string& args, const std::string& env = {}) {
    const std::string command = env + (env.empty() ? "" : " ") + CLIFFEX_CLI_PATH + " " + args + " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    if (pipe == nullptr) {
        return {-1, {}};
    }
    std::string out;
    std::array<char, 4096> buffer{};
    std::size_t n = 0;
    while ((n = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
        out.append(buffer.data(), n);
    }
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

inline std::string first_line(const std::string& text) { return text.substr(0, text.find('\n')); }

}  // namespace cliffex::testing
