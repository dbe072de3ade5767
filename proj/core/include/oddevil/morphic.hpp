#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <vector>

#include "oddevil/types.hpp"

namespace oddevil {

using Word = std::vector<Letter>;

/// Default memory ceiling for materialized prefixes (1 GiB of letters).
inline constexpr std::size_t kDefaultPrefixBudgetBytes = std::size_t{1} << 30;

/// Image of letter c under the cyclic-shift morphism on {0, ..., d-1}:
/// (c, c+1, ..., d-1, 0, ..., c-1). Throws DomainError if c >= d.
[[nodiscard]] Word morphism_image(Letter c, Radix d);

/// First `len` letters of the fixed point t_d, generated block by block:
/// block r is morphism_image(t_d(r)). Throws ResourceError when the prefix
/// would exceed `budget_bytes`, DomainError when len < 0.
[[nodiscard]] Word prefix(Radix d, std::int64_t len,
                          std::size_t budget_bytes = kDefaultPrefixBudgetBytes);

/// Unbounded stream of t_d(0), t_d(1), ...
///
/// Letter d*r + alpha is residue(t_d(r) + alpha). The block letters t_d(r)
/// come from a lazily created stream one level up, so a stream that has
/// emitted n letters holds O(log_d n) state and does O(1) amortized work per
/// letter. Single owner; movable, not copyable.
class LetterStream {
 public:
  explicit LetterStream(Radix d) : d_(d) {}

  LetterStream(LetterStream&&) noexcept = default;
  LetterStream& operator=(LetterStream&&) noexcept = default;
  LetterStream(const LetterStream&) = delete;
  LetterStream& operator=(const LetterStream&) = delete;

  [[nodiscard]] Letter next();
  /// Index of the letter the next call to next() returns.
  [[nodiscard]] std::int64_t cursor() const noexcept { return cursor_; }
  [[nodiscard]] Radix radix() const noexcept { return d_; }

 private:
  Radix d_;
  std::int64_t cursor_ = 0;
  std::int64_t offset_in_block_ = 0;
  Letter block_letter_ = 0;
  std::unique_ptr<LetterStream> blocks_;
};

[[nodiscard]] inline LetterStream stream(Radix d) { return LetterStream(d); }

}  // namespace oddevil
