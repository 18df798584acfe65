#pragma once

#include "isobound/serialize.hpp"

#include <string>
#include <vector>

namespace isobound {

// Environment variable overriding the default working precision (bits).
inline constexpr const char* kPrecisionEnvVar = "ISOBOUND_PRECISION_BITS";

// Significant digits used for the human-readable "approx" renderings.
inline constexpr int kApproxDigits = 9;

struct CommandResult {
    enum class Status { Ok, Error, Unknown };

    Status status = Status::Ok;
    Json payload;                          // schema-valid JSON when status == Ok
    std::vector<std::string> diagnostics;  // human-readable notes, stderr-bound
    std::string text;                      // raw textual output (census lines); empty otherwise

    int exit_code() const;  // 0 / 1 / 2 for Ok / Error / Unknown
};

// Executes one subcommand. `args` excludes the program name. Never throws:
// failures come back as status Error with a diagnostic.
CommandResult run(const std::vector<std::string>& args);

// What the binary prints on stdout: `text` verbatim when present, otherwise
// the payload as 2-space-indented JSON with a trailing newline. Deterministic
// for identical argv and environment.
std::string render(const CommandResult& result);

}  // namespace isobound
