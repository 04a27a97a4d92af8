#pragma once

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

// Minimal subprocess runner for driving the CLI binary from tests.

namespace testsupport {

struct CommandResult {
    int exit_code = -1;
    std::string out;
};

inline std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Runs `command` through the shell, capturing stdout; stderr is dropped
// unless the caller redirects it inside `command`.
inline CommandResult run_command(const std::string& command) {
    const std::string out_path = "cmd_stdout.tmp";
    const int raw = std::system((command + " > " + out_path + " 2> cmd_stderr.tmp").c_str());
    CommandResult result;
    if (raw != -1 && WIFEXITED(raw)) result.exit_code = WEXITSTATUS(raw);
    result.out = slurp(out_path);
    std::remove(out_path.c_str());
    std::remove("cmd_stderr.tmp");
    return result;
}

inline std::size_t count_occurrences(const std::string& text, const std::string& needle) {
    std::size_t count = 0;
    for (std::size_t pos = text.find(needle); pos != std::string::npos;
         pos = text.find(needle, pos + needle.size()))
        ++count;
    return count;
}

}  // namespace testsupport
