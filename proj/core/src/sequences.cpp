#include "oddevil/sequences.hpp"

#include <string>

#include "oddevil/digits.hpp"

namespace oddevil {

namespace {

void require_index(std::int64_t n) {
  if (n < 0) throw DomainError("sequence index must be >= 0, got " + std::to_string(n));
}

}  // namespace

std::int64_t term(const SequenceSpec& spec, std::int64_t n) {
  require_index(n);
  const Radix d = spec.radix();
  const auto offset = residue(static_cast<std::int64_t>(spec.cls()) - thue_morse(n, d), d);
  return checked::add(checked::mul(d.value(), n), static_cast<std::int64_t>(offset));
}

std::int64_t term_reflected(const SequenceSpec& spec, std::int64_t n) {
  require_index(n);
  const std::int64_t base = spec.radix().value();
  const std::int64_t block_end = checked::add(checked::mul(base, n), base - 1);
  const std::int64_t probe = block_end - static_cast<std::int64_t>(spec.cls());
  return block_end - static_cast<std::int64_t>(thue_morse(probe, spec.radix()));
}

std::int64_t odious(std::int64_t n) {
  require_index(n);
  const std::int64_t twice = checked::mul<std::int64_t>(2, n);
  return checked::add<std::int64_t>(twice, 1) - thue_morse(n, Radix(kBinary));
}

std::int64_t evil(std::int64_t n) {
  require_index(n);
  return checked::mul<std::int64_t>(2, n) + thue_morse(n, Radix(kBinary));
}

bool is_member(std::int64_t k, const SequenceSpec& spec) {
  return thue_morse(k, spec.radix()) == spec.cls();
}

std::int64_t rank(std::int64_t k, const SequenceSpec& spec) {
  const Letter actual = thue_morse(k, spec.radix());
  if (actual != spec.cls()) {
    throw DomainError(std::to_string(k) + " is not in class " + std::to_string(spec.cls()) +
                      " for radix " + std::to_string(spec.radix().value()) +
                      "; its class is " + std::to_string(actual));
  }
  return k / spec.radix().value();
}

std::int64_t compose(std::int64_t outer, std::int64_t inner, Radix d, std::int64_t n) {
  const SequenceSpec outer_spec(outer, d);
  const SequenceSpec inner_spec(inner, d);
  const std::int64_t inner_term = term(inner_spec, n);
  const auto shift = residue(static_cast<std::int64_t>(outer_spec.cls()) -
                                 static_cast<std::int64_t>(inner_spec.cls()),
                             d);
  return checked::add(checked::mul(d.value(), inner_term), static_cast<std::int64_t>(shift));
}

}  // namespace oddevil
