#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace oddevil::cli {

enum class OutputFormat { kPlain, kCsv, kBfile };

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

struct CommandResult {
  int exit_code = kExitOk;
  std::string out;
  std::string err;
};

using IndexedValues = std::vector<std::pair<std::int64_t, std::int64_t>>;

/// Renders values[n] at index n + index_offset.
///   plain: values separated by single spaces, newline-terminated
///   csv:   "<index>,<value>" per line
///   bfile: "<index> <value>" per line
[[nodiscard]] std::string render_terms(const std::vector<std::int64_t>& values,
                                       OutputFormat format, std::int64_t index_offset);

[[nodiscard]] std::string render_bfile(const IndexedValues& records);

/// Parses b-file text: one "<index> <value>" record per newline-terminated
/// line. Throws std::invalid_argument on anything else.
[[nodiscard]] IndexedValues parse_bfile(std::string_view text);

/// Runs the tool with argv-style arguments (args[0] is the program name).
[[nodiscard]] CommandResult run(const std::vector<std::string>& args);

}  // namespace oddevil::cli
