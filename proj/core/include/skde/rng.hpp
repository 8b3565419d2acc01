#pragma once

#include <cstdint>

namespace skde {

//! Portable deterministic 64-bit generator (SplitMix64).
//!
//! Every random decision in this project flows through this generator so
//! that results are reproducible bit-for-bit across platforms and across
//! reimplementations in other languages. The state update is fixed:
//!
//!   state += 0x9E3779B97F4A7C15
//!   z = state
//!   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//!   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//!   output = z ^ (z >> 31)
//!
//! Derived quantities are equally pinned down:
//!   - next_double(): ((output >> 11) + 0.5) * 2^-53, strictly inside (0,1)
//!   - next_below(b): output % b  (the bias of order b/2^64 is accepted
//!     in exchange for exact cross-language agreement)
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    state_ += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  //! Uniform deviate strictly inside (0,1); safe under log() and acos().
  double next_double() {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
  }

  //! Uniform integer in [0, bound). bound must be nonzero.
  std::uint64_t next_below(std::uint64_t bound) { return next_u64() % bound; }

 private:
  std::uint64_t state_;
};

}  // namespace skde
