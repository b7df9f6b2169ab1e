#pragma once

// Modular arithmetic over moduli up to p^2 with p < 2^40.
//
// Two integer widths are in play: mod-p work fits in 64 bits and runs
// through the fast paths in montgomery.hpp and kernels.hpp, while mod-p^2
// work (Fermat and Lucas quotients, Wolstenholme) needs 128-bit values.
// mul_mod below accepts any modulus below 2^96.

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "hsearch/error.hpp"
#include "hsearch/int128.hpp"

namespace hsearch {

inline constexpr u64 kMaxPrime = u64{1} << 40;
inline constexpr u128 kMaxModulus = u128{1} << 96;
inline constexpr std::size_t kDefaultBatchBlock = 4096;

/// A value reduced to [0, modulus).
struct Residue {
  u128 value = 0;
  u128 modulus = 1;

  friend bool operator==(const Residue&, const Residue&) = default;
};

/// A prime below kMaxPrime together with its square.
class PrimeContext {
 public:
  // Throws invalid_argument if p is not prime or p >= kMaxPrime.
  explicit PrimeContext(u64 p);

  u64 p() const noexcept { return p_; }
  u128 p_squared() const noexcept { return p_squared_; }

 private:
  u64 p_;
  u128 p_squared_;
};

/// Canonical representative of a signed value modulo m.
u128 reduce(i128 value, u128 modulus);

/// a*b mod m for a, b < m < 2^96.
inline u128 mul_mod(u128 a, u128 b, u128 m) {
  if (m <= UINT64_MAX) {
    return static_cast<u128>(static_cast<u64>(a)) * static_cast<u64>(b) % m;
  }
  u128 r = 0;
  for (int shift = 64; shift >= 0; shift -= 32) {
    const u128 limb = (b >> shift) & 0xffffffffu;
    r = ((r << 32) % m + a * limb % m) % m;
  }
  return r;
}

inline u128 add_mod(u128 a, u128 b, u128 m) {
  const u128 s = a + b;
  return s >= m ? s - m : s;
}

inline u128 sub_mod(u128 a, u128 b, u128 m) { return a >= b ? a - b : a + m - b; }

Residue mod_pow(i128 base, u64 exponent, u128 modulus);

/// Inverse of a modulo m (m need not be prime); throws non_invertible when gcd(a, m) != 1.
Residue mod_inv(i128 a, u128 modulus);

/// 64-bit inverse used by the hot paths; requires m < 2^63 and gcd(a, m) = 1.
u64 inv_mod_u64(u64 a, u64 m);

/// Elementwise inverses mod p using prefix-product batching, one inversion per block.
/// Throws non_invertible naming the first index whose element is divisible by p.
std::vector<u64> batch_inv(std::span<const u64> values, u64 p,
                           std::size_t block_size = kDefaultBatchBlock);

/// Jacobi symbol (a/n) for odd n >= 1, binary algorithm.
int jacobi(i128 a, u128 n);

/// Deterministic Miller-Rabin, exact for n < 3.3e24.
bool is_prime(u128 n);

/// Row-major 2x2 or 3x3 matrix with entries in [0, modulus).
class SmallMatrix {
 public:
  // Entries are canonicalized mod `modulus`; dimension must be 2 or 3 and
  // `entries` must hold dimension^2 values.
  SmallMatrix(int dimension, std::span<const i128> entries, u128 modulus);

  static SmallMatrix identity(int dimension, u128 modulus);

  int dimension() const noexcept { return dim_; }
  u128 modulus() const noexcept { return modulus_; }
  u128 at(int row, int col) const { return e_[static_cast<std::size_t>(row * dim_ + col)]; }

  SmallMatrix operator*(const SmallMatrix& rhs) const;
  friend bool operator==(const SmallMatrix&, const SmallMatrix&) = default;

 private:
  SmallMatrix(int dimension, u128 modulus);

  int dim_;
  u128 modulus_;
  std::array<u128, 9> e_{};
};

/// m^n reduced mod m.modulus(); n = 0 gives the identity.
SmallMatrix mat_pow(const SmallMatrix& m, u64 n);

}  // namespace hsearch
