#pragma once

#include "hsearch/error.hpp"
#include "hsearch/int128.hpp"

namespace hsearch {

/// Montgomery multiplication modulo an odd n < 2^63 with R = 2^64.
/// Values in Montgomery form are kept in [0, n).
class Montgomery64 {
 public:
  explicit Montgomery64(u64 n) : n_(n) {
    if ((n & 1) == 0 || n < 3 || n >= (u64{1} << 63)) {
      throw Error(ErrorKind::invalid_modulus, "Montgomery modulus must be odd and in [3, 2^63)");
    }
    u64 inv = n;  // n*n = 1 mod 8; each Newton step doubles the correct bits
    for (int i = 0; i < 5; ++i) inv *= 2 - n * inv;
    neg_inv_ = ~inv + 1;
    const u128 r = (u128{1} << 64) % n;
    r2_ = static_cast<u64>(r * r % n);
    one_ = static_cast<u64>(r);
  }

  u64 modulus() const noexcept { return n_; }
  u64 one() const noexcept { return one_; }

  u64 reduce(u128 t) const noexcept {
    const u64 m = static_cast<u64>(t) * neg_inv_;
    const u64 r = static_cast<u64>((t + static_cast<u128>(m) * n_) >> 64);
    return r >= n_ ? r - n_ : r;
  }
  u64 mul(u64 a, u64 b) const noexcept { return reduce(static_cast<u128>(a) * b); }
  u64 add(u64 a, u64 b) const noexcept {
    const u64 s = a + b;
    return s >= n_ ? s - n_ : s;
  }
  u64 sub(u64 a, u64 b) const noexcept { return a >= b ? a - b : a + n_ - b; }

  u64 to_mont(u64 a) const noexcept { return mul(a % n_, r2_); }
  u64 from_mont(u64 a) const noexcept { return reduce(a); }

 private:
  u64 n_;
  u64 neg_inv_;
  u64 r2_;
  u64 one_;
};

}  // namespace hsearch
