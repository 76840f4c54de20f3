#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rigged::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitNumerical = 3;

inline constexpr const char* kToolName = "rigged";
inline constexpr const char* kToolVersion = "0.1.0";

/// Entry point shared by the executable and the tests. args[0] is the
/// program name. Reports go to `out` unless --out is given; diagnostics go to
/// `err` as a single line.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Lowercase hex SHA-256 of the bytes.
std::string sha256_hex(const std::string& bytes);

} // namespace rigged::cli
