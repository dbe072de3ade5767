#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <ostream>
#include <string>

#include "oddevil/checked.hpp"
#include "oddevil/errors.hpp"

namespace oddevil {

/// A digit of a radix-d word: always in [0, d-1] for its associated radix.
using Letter = std::uint32_t;

/// The base d >= 2 governing digit sums and residues.
class Radix {
 public:
  static constexpr std::int64_t kMax = std::numeric_limits<std::int32_t>::max();

  explicit Radix(std::int64_t d) : d_(d) {
    if (d < 2 || d > kMax) {
      throw DomainError("radix must lie in [2, " + std::to_string(kMax) + "], got " +
                        std::to_string(d));
    }
  }

  [[nodiscard]] std::int64_t value() const noexcept { return d_; }
  friend bool operator==(Radix, Radix) = default;

 private:
  std::int64_t d_;
};

inline constexpr std::int64_t kBinary = 2;

/// Identifies the generalized sequence of integers k with s_d(k) = j (mod d).
class SequenceSpec {
 public:
  SequenceSpec(std::int64_t j, Radix d) : j_(0), d_(d) {
    if (j < 0 || j >= d.value()) {
      throw DomainError("class j must lie in [0, " + std::to_string(d.value() - 1) + "], got " +
                        std::to_string(j));
    }
    j_ = static_cast<Letter>(j);
  }

  static SequenceSpec odious() { return {1, Radix(kBinary)}; }
  static SequenceSpec evil() { return {0, Radix(kBinary)}; }

  [[nodiscard]] Letter cls() const noexcept { return j_; }
  [[nodiscard]] Radix radix() const noexcept { return d_; }
  friend bool operator==(const SequenceSpec&, const SequenceSpec&) = default;

 private:
  Letter j_;
  Radix d_;
};

/// Exact value of a summatory function. 128-bit signed storage.
class SumValue {
 public:
  constexpr SumValue() = default;
  constexpr explicit SumValue(Int128 v) : v_(v) {}

  [[nodiscard]] constexpr Int128 value() const noexcept { return v_; }
  [[nodiscard]] std::string str() const { return to_string(v_); }

  friend constexpr bool operator==(SumValue, SumValue) = default;
  friend constexpr std::strong_ordering operator<=>(SumValue a, SumValue b) {
    return a.v_ <=> b.v_;
  }
  friend std::ostream& operator<<(std::ostream& os, SumValue s) { return os << s.str(); }

 private:
  Int128 v_ = 0;
};

}  // namespace oddevil
