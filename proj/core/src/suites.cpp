#include "oddevil/suites.hpp"

#include <string>

#include "oddevil/characterization.hpp"
#include "oddevil/digits.hpp"
#include "oddevil/sequences.hpp"
#include "oddevil/summation.hpp"

namespace oddevil {

namespace {

constexpr std::int64_t kMinCompositionRadix = 2;
constexpr std::int64_t kMaxCompositionRadix = 8;

std::optional<std::string> mismatch(SumValue lhs, SumValue rhs) {
  if (lhs == rhs) return std::nullopt;
  return "lhs=" + lhs.str() + " rhs=" + rhs.str();
}

// bounded_sum(n) - bounded_sum(n-1) must be n for members and 0 otherwise;
// with bounded_sum(0) = 0 this telescopes to the filtered accumulation and
// stays local to each shard.
VerificationReport bounded_sum_report(NumberClass cls, std::int64_t n_max, unsigned jobs) {
  const SequenceSpec spec = cls == NumberClass::kOdious ? SequenceSpec::odious() : SequenceSpec::evil();
  const char* label = cls == NumberClass::kOdious ? "bounded sum of odious numbers <= n"
                                                  : "bounded sum of evil numbers <= n";
  return sweep(label, 0, n_max, jobs, [&](std::int64_t n) {
    const SumValue here = bounded_sum(cls, n);
    const SumValue before = n == 0 ? SumValue(0) : bounded_sum(cls, n - 1);
    const Int128 step = is_member(n, spec) ? n : 0;
    return mismatch(SumValue(here.value() - before.value()), SumValue(step));
  });
}

VerificationReport composition_report(std::int64_t d, std::int64_t n_max, unsigned jobs) {
  const Radix radix(d);
  return sweep("composition d=" + std::to_string(d), 0, n_max, jobs,
               [&](std::int64_t n) -> std::optional<std::string> {
                 for (std::int64_t i = 0; i < d; ++i) {
                   const std::int64_t inner = term(SequenceSpec(i, radix), n);
                   for (std::int64_t j = 0; j < d; ++j) {
                     const std::int64_t lhs = compose(j, i, radix, n);
                     const std::int64_t rhs = term(SequenceSpec(j, radix), inner);
                     if (lhs != rhs) {
                       return "i=" + std::to_string(i) + " j=" + std::to_string(j) +
                              " compose=" + std::to_string(lhs) + " nested=" + std::to_string(rhs);
                     }
                   }
                 }
                 return std::nullopt;
               });
}

}  // namespace

std::optional<Suite> parse_suite(std::string_view name) noexcept {
  if (name == "relations") return Suite::kRelations;
  if (name == "identities") return Suite::kIdentities;
  if (name == "all") return Suite::kAll;
  return std::nullopt;
}

std::vector<VerificationReport> verify_identities(std::int64_t n_max, unsigned jobs) {
  if (n_max < 0) throw DomainError("n_max must be >= 0, got " + std::to_string(n_max));
  std::vector<VerificationReport> reports;
  for (auto kind : {CrossIdentity::kOdiousUptoEvil, CrossIdentity::kEvilUptoOdious,
                    CrossIdentity::kOdiousUptoOdious, CrossIdentity::kEvilUptoEvil}) {
    reports.push_back(sweep("cross identity " + std::string(name(kind)), 0, n_max, jobs,
                            [kind](std::int64_t n) {
                              const auto [lhs, rhs] = cross_identity(kind, n);
                              return mismatch(lhs, rhs);
                            }));
  }
  reports.push_back(bounded_sum_report(NumberClass::kOdious, n_max, jobs));
  reports.push_back(bounded_sum_report(NumberClass::kEvil, n_max, jobs));
  for (std::int64_t d = kMinCompositionRadix; d <= kMaxCompositionRadix; ++d) {
    reports.push_back(composition_report(d, n_max, jobs));
  }
  return reports;
}

std::vector<VerificationReport> run_suite(Suite suite, std::int64_t n_max, unsigned jobs) {
  std::vector<VerificationReport> reports;
  if (suite == Suite::kRelations || suite == Suite::kAll) {
    auto rel = verify_relations(n_max, jobs);
    reports.insert(reports.end(), rel.begin(), rel.end());
  }
  if (suite == Suite::kIdentities || suite == Suite::kAll) {
    auto ids = verify_identities(n_max, jobs);
    reports.insert(reports.end(), ids.begin(), ids.end());
  }
  return reports;
}

}  // namespace oddevil
