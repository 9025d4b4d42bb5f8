#pragma once

#include <iosfwd>
#include <span>
#include <string>

#include <json.hpp>

namespace covercalc::cli {

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kObstructed = 1;  // only with obstruct --strict
inline constexpr int kUsageError = 2;

/// Runs one command. `args` excludes the program name. Every command first
/// builds a JSON record; --json prints it, otherwise render_text(record) is
/// printed.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

/// Human-readable rendering of a record produced by any command. Throws
/// DataError for records it does not recognize.
std::string render_text(const nlohmann::json& record);

}  // namespace covercalc::cli
