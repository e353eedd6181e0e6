#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

namespace derham {

/// Process exit codes of the command-line front end.
enum class ExitCode : int {
    Ok = 0,
    Failure = 1,
    ParseFailure = 2,
    NotReduced = 3,
    PartialSplit = 4,
    RetriesExhausted = 5,
};

struct CommandOptions {
    std::string op;  // count | factor | generic | section
    std::string expr;
    std::optional<std::string> vars;
    std::optional<std::string> var;
    std::uint64_t seed = 1;
    unsigned retries = 8;
    std::string format = "text";
    std::optional<std::string> plane;
    unsigned random_planes = 0;
    bool timing = false;
};

struct RunReport {
    nlohmann::ordered_json payload;
    ExitCode exit_code = ExitCode::Ok;
    /// One-line diagnostic for stderr; empty on success.
    std::string diagnostic;
};

/// Runs one command. Library errors are caught and turned into a report with an
/// "error" object and the matching exit code.
RunReport run_command(const CommandOptions& options);

/// Deterministic rendering: compact-indented JSON or "key: value" text lines.
std::string render(const RunReport& report, const std::string& format);

}  // namespace derham
