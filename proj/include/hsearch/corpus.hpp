#pragma once

#include <span>
#include <vector>

#include "hsearch/int128.hpp"

namespace hsearch {

enum class VerifyMethod { formula, pipeline, oracle };

const char* to_string(VerifyMethod method);

struct KnownHit {
  int N;
  u64 p;
  VerifyMethod method;
};

/// Every published (N, p) with p | H_{floor(p/N)}, 2 <= N <= 46, including
/// the Wieferich primes listed under both N = 2 and N = 4.
std::span<const KnownHit> known_hits();

}  // namespace hsearch
