#pragma once

#include <cstdint>

namespace fruc {

// xorshift64* generator. Deterministic across platforms so synthetic
// sequences and test fixtures reproduce to the byte.
class Xorshift64Star {
 public:
  explicit Xorshift64Star(std::uint64_t seed)
      : state_(seed ? seed : 0x9e3779b97f4a7c15ull) {}

  std::uint64_t next() {
    state_ ^= state_ >> 12;
    state_ ^= state_ << 25;
    state_ ^= state_ >> 27;
    return state_ * 0x2545f4914f6cdd1dull;
  }

  // Top byte of the state mix; the low bits of xorshift are weaker.
  std::uint8_t next_byte() { return static_cast<std::uint8_t>(next() >> 56); }

  std::uint32_t next_below(std::uint32_t bound) {
    return static_cast<std::uint32_t>(next() % bound);
  }

  // Inclusive range.
  int next_in(int lo, int hi) {
    return lo + static_cast<int>(next_below(static_cast<std::uint32_t>(hi - lo + 1)));
  }

 private:
  std::uint64_t state_;
};

}  // namespace fruc
