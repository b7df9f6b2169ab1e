#include "hsearch/kernels.hpp"

#include <algorithm>
#include <array>
#include <string>
#include <vector>

#include <omp.h>

#include "hsearch/montgomery.hpp"

namespace hsearch {

namespace {

u64 term_count(u64 a, u64 b, u64 step) { return a > b ? 0 : (b - a) / step + 1; }

void check_range(u64 p, u64 a, u64 b, u64 step) {
  if (step == 0) throw Error(ErrorKind::invalid_argument, "step must be positive");
  if (a > b) return;
  if (a == 0) throw Error(ErrorKind::index_out_of_range, "reciprocal of 0 requested");
  if (b >= p) {
    throw Error(ErrorKind::index_out_of_range,
                "index " + std::to_string(b) + " is not below the prime " + std::to_string(p));
  }
}

// num/den in Montgomery form.
struct Fraction {
  u64 num;
  u64 den;
};

Fraction merge(const Montgomery64& mont, Fraction x, Fraction y) {
  return {mont.add(mont.mul(x.num, y.den), mont.mul(y.num, x.den)), mont.mul(x.den, y.den)};
}

// Sum of 1/(first + k*step) for k in [0, count). Four interleaved lanes keep
// the multiplier pipelines busy; the dependency chain per lane is two muls.
Fraction accumulate(const Montgomery64& mont, u64 first, u64 step, u64 count) {
  constexpr int kLanes = 4;
  std::array<Fraction, kLanes> lane;
  std::array<u64, kLanes> j{};
  const u64 lane_step = mont.to_mont(static_cast<u64>(static_cast<u128>(step) * kLanes % mont.modulus()));
  for (int l = 0; l < kLanes; ++l) {
    lane[l] = {0, mont.one()};
    j[l] = mont.to_mont(static_cast<u64>((first + static_cast<u128>(step) * l) % mont.modulus()));
  }
  const u64 full = count / kLanes;
  for (u64 k = 0; k < full; ++k) {
    for (int l = 0; l < kLanes; ++l) {
      lane[l].num = mont.add(mont.mul(lane[l].num, j[l]), lane[l].den);
      lane[l].den = mont.mul(lane[l].den, j[l]);
      j[l] = mont.add(j[l], lane_step);
    }
  }
  for (u64 l = 0; l < count % kLanes; ++l) {
    lane[l].num = mont.add(mont.mul(lane[l].num, j[l]), lane[l].den);
    lane[l].den = mont.mul(lane[l].den, j[l]);
  }
  Fraction total = lane[0];
  for (int l = 1; l < kLanes; ++l) total = merge(mont, total, lane[l]);
  return total;
}

u64 resolve(const Montgomery64& mont, Fraction f) {
  const u64 p = mont.modulus();
  const u64 num = mont.from_mont(f.num);
  const u64 den = mont.from_mont(f.den);
  return static_cast<u64>(static_cast<u128>(num) * inv_mod_u64(den, p) % p);
}

}  // namespace

namespace reference {

u64 reciprocal_sum(u64 p, u64 a, u64 b, u64 step, std::size_t block_size) {
  check_range(p, a, b, step);
  const u64 count = term_count(a, b, step);
  u64 total = 0;
  std::vector<u64> block;
  for (u64 done = 0; done < count;) {
    const u64 len = std::min<u64>(block_size, count - done);
    block.resize(len);
    for (u64 i = 0; i < len; ++i) block[i] = a + (done + i) * step;
    for (u64 inv : batch_inv(block, p, block_size)) total = (total + inv) % p;
    done += len;
  }
  return total;
}

}  // namespace reference

namespace kernels {

u64 reciprocal_sum(u64 p, u64 a, u64 b, u64 step) {
  check_range(p, a, b, step);
  const u64 count = term_count(a, b, step);
  if (count == 0) return 0;
  if (p == 2) return reference::reciprocal_sum(p, a, b, step);
  const Montgomery64 mont(p);
  return resolve(mont, accumulate(mont, a, step, count));
}

u64 reciprocal_sum_parallel(u64 p, u64 a, u64 b, u64 step) {
  check_range(p, a, b, step);
  const u64 count = term_count(a, b, step);
  const int threads = omp_get_max_threads();
  if (count < kParallelThreshold || threads < 2 || omp_in_parallel() || p == 2) {
    return reciprocal_sum(p, a, b, step);
  }
  const Montgomery64 mont(p);
  std::vector<Fraction> partial(static_cast<std::size_t>(threads), Fraction{0, mont.one()});
#pragma omp parallel num_threads(threads)
  {
    const auto t = static_cast<u64>(omp_get_thread_num());
    const auto n = static_cast<u64>(omp_get_num_threads());
    const u64 lo = count * t / n;
    const u64 hi = count * (t + 1) / n;
    if (hi > lo) partial[t] = accumulate(mont, a + lo * step, step, hi - lo);
  }
  Fraction total = partial[0];
  for (std::size_t t = 1; t < partial.size(); ++t) total = merge(mont, total, partial[t]);
  return resolve(mont, total);
}

}  // namespace kernels

}  // namespace hsearch
