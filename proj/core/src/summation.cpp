#include "oddevil/summation.hpp"

#include <algorithm>
#include <string>

#include "oddevil/digits.hpp"
#include "oddevil/sequences.hpp"

namespace oddevil {

namespace {

using checked::add;
using checked::mul;
using checked::sub;

void require_natural(std::int64_t n, const char* what) {
  if (n < 0) throw DomainError(std::string(what) + ": expected n >= 0, got " + std::to_string(n));
}

Int128 wide(std::int64_t v) { return static_cast<Int128>(v); }

Int128 tm2(std::int64_t n) { return thue_morse(n, Radix(kBinary)); }

// n(n+1)/2 without an intermediate overflow for n < 2^63.
Int128 triangular(std::int64_t n) {
  const Int128 m = wide(n);
  return (m % 2 == 0) ? mul<Int128>(m / 2, m + 1) : mul<Int128>(m, (m + 1) / 2);
}

// Shared by S and R: n^2 + (3n+1)/2 for odd n, n^2 + 3n/2 for even n.
Int128 binary_summatory_base(std::int64_t n) {
  const Int128 m = wide(n);
  const Int128 square = mul<Int128>(m, m);
  return (n % 2 != 0) ? add<Int128>(square, (3 * m + 1) / 2) : add<Int128>(square, 3 * m / 2);
}

}  // namespace

SumValue residue_run_sum(std::int64_t a, std::int64_t r, Radix d) {
  const std::int64_t base = d.value();
  if (a < 0 || a >= base || r < 0 || r >= base) {
    throw DomainError("residue_run_sum: a and r must lie in [0, " + std::to_string(base - 1) +
                      "], got a=" + std::to_string(a) + " r=" + std::to_string(r));
  }
  const Int128 value = wide(a) * (r + 1) - triangular(r) + wide(base) * std::max<std::int64_t>(r - a, 0);
  return SumValue(value);
}

SumValue summatory(const SequenceSpec& spec, std::int64_t n_upto) {
  require_natural(n_upto, "summatory");
  const Radix d = spec.radix();
  const std::int64_t base = d.value();
  const std::int64_t blocks = n_upto / base;
  const std::int64_t tail = n_upto % base;
  const auto start = residue(static_cast<std::int64_t>(spec.cls()) - thue_morse(blocks, d), d);

  const Int128 linear = mul<Int128>(wide(base), triangular(n_upto));
  const Int128 full_blocks = mul<Int128>(wide(blocks), triangular(base - 1));
  const Int128 partial = residue_run_sum(start, tail, d).value();
  return SumValue(add(add(linear, full_blocks), partial));
}

SumValue odious_summatory(std::int64_t n) {
  require_natural(n, "odious_summatory");
  const Int128 base = binary_summatory_base(n);
  return SumValue(n % 2 != 0 ? base : add<Int128>(base, 1 - tm2(n)));
}

SumValue evil_summatory(std::int64_t n) {
  require_natural(n, "evil_summatory");
  const Int128 base = binary_summatory_base(n);
  return SumValue(n % 2 != 0 ? base : add<Int128>(base, tm2(n)));
}

std::string_view name(CrossIdentity kind) noexcept {
  switch (kind) {
    case CrossIdentity::kOdiousUptoEvil: return "A_UPTO_B";
    case CrossIdentity::kEvilUptoOdious: return "B_UPTO_A";
    case CrossIdentity::kOdiousUptoOdious: return "A_UPTO_A";
    case CrossIdentity::kEvilUptoEvil: return "B_UPTO_B";
  }
  return "?";
}

CrossValues cross_identity(CrossIdentity kind, std::int64_t n) {
  require_natural(n, "cross_identity");
  const Int128 m = wide(n);
  switch (kind) {
    case CrossIdentity::kOdiousUptoEvil: {
      const std::int64_t upper = evil(n);
      const Int128 u = wide(upper);
      return {summatory(SequenceSpec::odious(), upper),
              SumValue(add(add(mul(u, u), u), m + 1))};
    }
    case CrossIdentity::kEvilUptoOdious: {
      const std::int64_t upper = odious(n);
      const Int128 u = wide(upper);
      return {summatory(SequenceSpec::evil(), upper), SumValue(add(add(mul(u, u), u), m + 1))};
    }
    case CrossIdentity::kOdiousUptoOdious: {
      const std::int64_t upper = odious(n);
      const Int128 u = wide(upper);
      return {summatory(SequenceSpec::odious(), upper), SumValue(sub(add(mul(u, u), 2 * u), m))};
    }
    case CrossIdentity::kEvilUptoEvil: {
      const std::int64_t upper = evil(n);
      const Int128 u = wide(upper);
      return {summatory(SequenceSpec::evil(), upper), SumValue(sub(add(mul(u, u), 2 * u), m))};
    }
  }
  throw DomainError("unknown cross identity");
}

SumValue evil_upto_evil_quadratic_rhs(std::int64_t n) {
  require_natural(n, "evil_upto_evil_quadratic_rhs");
  const Int128 u = wide(evil(n));
  const Int128 m = wide(n);
  return SumValue(sub(add(mul(u, u), 2 * u), mul(m, m)));
}

SumValue bounded_sum(NumberClass cls, std::int64_t n) {
  require_natural(n, "bounded_sum");
  const Int128 m = wide(n);
  const Int128 square = mul(m, m);
  const Int128 t = tm2(n);
  const bool odd_class = cls == NumberClass::kOdious;
  // Each case is (quadratic numerator)/4 plus a t(n) correction; the
  // numerator is divisible by 4 within its residue class.
  switch (n % 4) {
    case 0:
      return odd_class ? SumValue(checked::div_exact<Int128>(square - m, 4, "odious n=0 mod 4") + m * t)
                       : SumValue(checked::div_exact<Int128>(square + 3 * m, 4, "evil n=0 mod 4") - m * t);
    case 1:
      return odd_class ? SumValue(checked::div_exact<Int128>(square + m - 2, 4, "odious n=1 mod 4") + t)
                       : SumValue(checked::div_exact<Int128>(square + m + 2, 4, "evil n=1 mod 4") - t);
    case 2:
      return odd_class
                 ? SumValue(checked::div_exact<Int128>(square - m - 2, 4, "odious n=2 mod 4") + (m + 1) * t)
                 : SumValue(checked::div_exact<Int128>(square + 3 * m + 2, 4, "evil n=2 mod 4") - (m + 1) * t);
    default:
      return SumValue(checked::div_exact<Int128>(square + m, 4, "n=3 mod 4"));
  }
}

std::int64_t odious_count_upto(std::int64_t n) {
  require_natural(n, "odious_count_upto");
  // floor((n-1)/2) + 1, with floor toward -infinity at n = 0.
  const std::int64_t initial = n == 0 ? 0 : (n - 1) / 2 + 1;
  const bool extra = n % 2 == 0 && thue_morse(n, Radix(kBinary)) == 1;
  return initial + (extra ? 1 : 0);
}

}  // namespace oddevil
