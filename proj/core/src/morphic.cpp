#include "oddevil/morphic.hpp"

#include <string>

#include "oddevil/digits.hpp"

namespace oddevil {

Word morphism_image(Letter c, Radix d) {
  const std::int64_t base = d.value();
  if (static_cast<std::int64_t>(c) >= base) {
    throw DomainError("letter " + std::to_string(c) + " out of range for radix " +
                      std::to_string(base));
  }
  Word image(static_cast<std::size_t>(base));
  for (std::int64_t alpha = 0; alpha < base; ++alpha) {
    image[static_cast<std::size_t>(alpha)] = residue(static_cast<std::int64_t>(c) + alpha, d);
  }
  return image;
}

Word prefix(Radix d, std::int64_t len, std::size_t budget_bytes) {
  if (len < 0) throw DomainError("prefix length must be >= 0, got " + std::to_string(len));
  const auto count = static_cast<std::size_t>(len);
  if (count > budget_bytes / sizeof(Letter)) {
    throw ResourceError("prefix of " + std::to_string(len) + " letters exceeds budget of " +
                        std::to_string(budget_bytes) + " bytes");
  }

  Word out;
  out.reserve(count);
  const std::int64_t base = d.value();
  // Block 0 is the image of t_d(0) = 0; block r >= 1 reads t_d(r) from out,
  // which is already populated because r < d*r.
  for (std::size_t r = 0; out.size() < count; ++r) {
    const Letter head = r == 0 ? 0 : out[r];
    for (std::int64_t alpha = 0; alpha < base && out.size() < count; ++alpha) {
      out.push_back(residue(static_cast<std::int64_t>(head) + alpha, d));
    }
  }
  return out;
}

Letter LetterStream::next() {
  if (offset_in_block_ == 0) {
    if (cursor_ == 0) {
      block_letter_ = 0;
    } else {
      if (!blocks_) {
        blocks_ = std::make_unique<LetterStream>(d_);
        (void)blocks_->next();  // t_d(0) seeds block 0, which is already done.
      }
      block_letter_ = blocks_->next();
    }
  }
  const Letter out = residue(static_cast<std::int64_t>(block_letter_) + offset_in_block_, d_);
  ++cursor_;
  if (++offset_in_block_ == d_.value()) offset_in_block_ = 0;
  return out;
}

}  // namespace oddevil
