#pragma once

#include <cstdio>
#include <stdexcept>
#include <string>

/* Runs a shell command, capturing stdout. The exit status is the process
   exit code (or -1 if it did not exit normally). */
struct CliResult {
    int status = -1;
    std::string out;
};

inline CliResult run_cli(const std::string& command) {
    CliResult r;
    FILE* pipe = popen(command.c_str(), "r");
    if (!pipe) throw std::runtime_error("popen failed for: " + command);
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
    int rc = pclose(pipe);
    if (rc >= 0 && WIFEXITED(rc)) r.status = WEXITSTATUS(rc);
    return r;
}
