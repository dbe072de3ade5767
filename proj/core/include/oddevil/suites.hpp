#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "oddevil/report.hpp"

namespace oddevil {

enum class Suite { kRelations, kIdentities, kAll };

[[nodiscard]] std::optional<Suite> parse_suite(std::string_view name) noexcept;

/// Cross identities (with the corrected evil-upto-evil right side), both
/// bounded sums, and the composition identity for d in [2, 8], on [0, n_max].
[[nodiscard]] std::vector<VerificationReport> verify_identities(std::int64_t n_max,
                                                                unsigned jobs = 1);

/// Runs a suite; reports come back in a fixed order independent of `jobs`.
[[nodiscard]] std::vector<VerificationReport> run_suite(Suite suite, std::int64_t n_max,
                                                        unsigned jobs = 1);

}  // namespace oddevil
