#include "hsearch/sieve.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hsearch/error.hpp"
#include "hsearch/modmath.hpp"

namespace hsearch {

namespace {

std::vector<u64> small_primes_through(u64 limit) {
  std::vector<unsigned char> composite(static_cast<std::size_t>(limit + 1), 0);
  std::vector<u64> primes;
  for (u64 i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    primes.push_back(i);
    for (u64 j = i * i; j <= limit; j += i) composite[j] = 1;
  }
  return primes;
}

}  // namespace

PrimeChunker::PrimeChunker(u64 lo, u64 hi, u64 chunk_span)
    : next_lo_(std::max<u64>(lo, 2)), hi_(hi), span_(chunk_span) {
  if (chunk_span == 0) throw Error(ErrorKind::invalid_argument, "chunk span must be positive");
  if (hi > kMaxPrime) {
    throw Error(ErrorKind::resource_limit,
                "upper bound " + std::to_string(hi) + " exceeds the supported 2^40");
  }
  u64 root = static_cast<u64>(std::sqrt(static_cast<double>(hi)));
  while (root * root < hi) ++root;
  base_primes_ = small_primes_through(root);
}

std::optional<PrimeChunk> PrimeChunker::next() {
  if (next_lo_ >= hi_) return std::nullopt;
  PrimeChunk chunk{next_lo_, std::min(hi_, next_lo_ + span_), {}};
  next_lo_ = chunk.hi;
  const u64 width = chunk.hi - chunk.lo;
  composite_.assign(static_cast<std::size_t>(width), 0);
  for (u64 q : base_primes_) {
    const u64 qq = q * q;
    if (qq >= chunk.hi) break;
    u64 start = std::max(qq, (chunk.lo + q - 1) / q * q);
    for (u64 x = start; x < chunk.hi; x += q) composite_[x - chunk.lo] = 1;
  }
  for (u64 i = 0; i < width; ++i) {
    if (!composite_[i]) chunk.primes.push_back(chunk.lo + i);
  }
  return chunk;
}

std::vector<u64> primes_in(u64 lo, u64 hi) {
  std::vector<u64> out;
  if (lo >= hi) return out;
  PrimeChunker chunker(lo, hi, u64{1} << 16);
  while (auto chunk = chunker.next()) {
    out.insert(out.end(), chunk->primes.begin(), chunk->primes.end());
  }
  return out;
}

}  // namespace hsearch
