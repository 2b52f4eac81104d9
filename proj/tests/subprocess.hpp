#ifndef LPCUT_TESTS_SUBPROCESS_HPP
#define LPCUT_TESTS_SUBPROCESS_HPP

#include <array>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include <sys/wait.h>

namespace lpcut::test {

struct CommandResult {
    int exit_code = -1;
    std::string output; // stdout only
};

inline CommandResult run_command(const std::string& command) {
    CommandResult result;
    std::string wrapped = command + " 2>/dev/null";
    FILE* pipe = popen(wrapped.c_str(), "r");
    if (!pipe)
        throw std::runtime_error("popen failed for: " + command);
    std::array<char, 4096> buffer;
    std::size_t got;
    while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
        result.output.append(buffer.data(), got);
    int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

// Locations are injected by the build; environment variables override so the
// binaries can be run from anywhere.
inline std::string tool_path() {
    if (const char* env = std::getenv("LPCUT_BIN"))
        return env;
    return LPCUT_DEFAULT_BIN;
}

inline std::string fixtures_dir() {
    if (const char* env = std::getenv("LPCUT_FIXTURES"))
        return env;
    return LPCUT_DEFAULT_FIXTURES;
}

} // namespace lpcut::test

#endif
