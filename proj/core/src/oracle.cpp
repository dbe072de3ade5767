#include "oddevil/oracle.hpp"

#include <string>

namespace oddevil::oracle {

Letter thue_morse(std::int64_t n, Radix d) {
  if (n < 0) throw DomainError("oracle::thue_morse: n must be >= 0");
  std::int64_t s = 0;
  for (std::int64_t rest = n; rest > 0; rest /= d.value()) s += rest % d.value();
  return static_cast<Letter>(s % d.value());
}

std::vector<std::int64_t> terms(const SequenceSpec& spec, std::int64_t count) {
  if (count < 0) throw DomainError("oracle::terms: count must be >= 0");
  std::vector<std::int64_t> out;
  out.reserve(static_cast<std::size_t>(count));
  for (std::int64_t k = 0; static_cast<std::int64_t>(out.size()) < count; ++k) {
    if (thue_morse(k, spec.radix()) == spec.cls()) out.push_back(k);
  }
  return out;
}

SumValue sum(const SequenceSpec& spec, std::int64_t n_upto) {
  if (n_upto < 0) throw DomainError("oracle::sum: n must be >= 0");
  Int128 total = 0;
  for (auto v : terms(spec, n_upto + 1)) total = checked::add<Int128>(total, v);
  return SumValue(total);
}

SumValue sum_upto_value(const SequenceSpec& spec, std::int64_t bound) {
  Int128 total = 0;
  for (std::int64_t k = 0; k <= bound; ++k) {
    if (thue_morse(k, spec.radix()) == spec.cls()) total = checked::add<Int128>(total, k);
  }
  return SumValue(total);
}

}  // namespace oddevil::oracle
