#pragma once

// Reciprocal-sum kernels: sum of 1/j mod p over the arithmetic progression
// j = a, a+step, ..., <= b. Every j must be coprime to p (callers keep b < p).
//
// `reference` is the straightforward serial path (batch inversion, then a
// plain sum) and is kept as the oracle for the optimized kernels.

#include <cstddef>

#include "hsearch/int128.hpp"
#include "hsearch/modmath.hpp"

namespace hsearch {

namespace reference {

u64 reciprocal_sum(u64 p, u64 a, u64 b, u64 step = 1,
                   std::size_t block_size = kDefaultBatchBlock);

}  // namespace reference

namespace kernels {

/// Running-fraction accumulation in Montgomery form; one inversion per call.
u64 reciprocal_sum(u64 p, u64 a, u64 b, u64 step = 1);

/// OpenMP version: splits the progression into per-thread slices and merges
/// their fractions. Falls back to the serial kernel for short progressions or
/// when already inside a parallel region.
u64 reciprocal_sum_parallel(u64 p, u64 a, u64 b, u64 step = 1);

/// Below this many terms the parallel kernel runs serially.
inline constexpr u64 kParallelThreshold = u64{1} << 18;

}  // namespace kernels

}  // namespace hsearch
