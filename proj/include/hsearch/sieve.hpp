#pragma once

#include <optional>
#include <vector>

#include "hsearch/int128.hpp"

namespace hsearch {

struct PrimeChunk {
  u64 lo;  // chunk covers [lo, hi)
  u64 hi;
  std::vector<u64> primes;
};

/// Segmented sieve over [lo, hi) emitting chunks of `chunk_span` integers.
/// Chunk boundaries are lo, lo + span, lo + 2 span, ... so a run restarted
/// at any boundary reproduces the remaining chunks exactly.
class PrimeChunker {
 public:
  PrimeChunker(u64 lo, u64 hi, u64 chunk_span);

  std::optional<PrimeChunk> next();

 private:
  u64 next_lo_;
  u64 hi_;
  u64 span_;
  std::vector<u64> base_primes_;
  std::vector<unsigned char> composite_;
};

/// All primes in [lo, hi).
std::vector<u64> primes_in(u64 lo, u64 hi);

}  // namespace hsearch
