#pragma once

#include <optional>
#include <vector>

#include "hsearch/int128.hpp"
#include "hsearch/modmath.hpp"

namespace hsearch {

enum class ForcedRule {
  square_of_next_prime,  // n + 1 = q prime > 3        => q^2 | H_n
  root_form,             // n = q(q - 1), q prime > 3  => q | H_n
  sqrt_form,             // n = q^2 - 1, q prime > 3   => q | H_n
};

const char* to_string(ForcedRule rule);

struct ForcedDivisor {
  u64 n;
  u64 divisor;
  ForcedRule rule;

  friend bool operator==(const ForcedDivisor&, const ForcedDivisor&) = default;
};

/// Divisors of the numerator of H_n guaranteed by Wolstenholme and the
/// indices p(p-1), p^2-1. Exact integer arithmetic only.
std::vector<ForcedDivisor> forced_divisors(u64 n);

/// H_{p-1} mod p^2; zero for every prime p > 3.
Residue wolstenholme_check(u64 p);

/// Indices n <= bound (default (p-3)/2) with p | H_n, in increasing order.
std::vector<u64> harmonic_scan(u64 p, std::optional<u64> bound = std::nullopt);

struct LinearFormHit {
  u64 k;
  u64 r;
  u64 n;
  u64 divisor;  // k*n + r
  bool divisor_is_prime;

  friend bool operator==(const LinearFormHit&, const LinearFormHit&) = default;
};

inline constexpr u64 kLinearFormCeiling = 20000;

/// Indices n <= n_max where k*n + r divides the numerator of H_n in lowest
/// terms. Keeps H_n as an exact fraction, so n_max is capped at
/// kLinearFormCeiling.
std::vector<LinearFormHit> linear_form_scan(u64 k, u64 r, u64 n_max, bool primes_only);

}  // namespace hsearch
