#pragma once

#include <complex>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

namespace fslab::cli {

enum ExitCode : int {
    kExitOk = 0,
    kExitUsage = 1,
    kExitDomain = 2,
    kExitVerification = 3,
};

/// Thrown for malformed flags or literals; maps to kExitUsage.
struct UsageError {
    std::string message;
};

/// Parses "x", "p/q", "a+bi", "a-bi", "bi" (no whitespace).
std::complex<double> parse_mu(std::string_view text);

/// Parses a real literal: decimal or "p/q".
double parse_real(std::string_view text);

/// Parses an angle: a real literal, optionally with a "pi" factor ("pi/2", "3pi/2", "-0.5pi").
double parse_angle(std::string_view text);

/// Formats with 17 significant digits, '.' decimal separator.
std::string format_double(double x);

/// Entry point shared by the executable and the tests. `threads_env` is the
/// value of FSLAB_THREADS, if set.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err,
        std::optional<std::string> threads_env = std::nullopt);

} // namespace fslab::cli
