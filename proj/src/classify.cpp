#include "hsearch/classify.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include <gmpxx.h>

#include "hsearch/error.hpp"

namespace hsearch {

namespace {

// floor(sqrt(x)), exact for all 64-bit x.
u64 isqrt(u64 x) {
  u64 r = static_cast<u64>(std::sqrt(static_cast<long double>(x)));
  while (static_cast<u128>(r) * r > x) --r;
  while (static_cast<u128>(r + 1) * (r + 1) <= x) ++r;
  return r;
}

std::optional<u64> exact_sqrt(u64 x) {
  const u64 r = isqrt(x);
  if (r * r == x) return r;
  return std::nullopt;
}

bool prime_above_3(u64 q) { return q > 3 && is_prime(q); }

}  // namespace

const char* to_string(ForcedRule rule) {
  switch (rule) {
    case ForcedRule::square_of_next_prime: return "square_of_next_prime";
    case ForcedRule::root_form: return "root_form";
    case ForcedRule::sqrt_form: return "sqrt_form";
  }
  return "unknown";
}

std::vector<ForcedDivisor> forced_divisors(u64 n) {
  std::vector<ForcedDivisor> out;
  if (n == 0) return out;
  if (prime_above_3(n + 1)) {
    out.push_back({n, (n + 1) * (n + 1), ForcedRule::square_of_next_prime});
  }
  if (const auto root = exact_sqrt(4 * n + 1); root && (*root + 1) % 2 == 0) {
    const u64 q = (1 + *root) / 2;
    if (prime_above_3(q)) out.push_back({n, q, ForcedRule::root_form});
  }
  if (const auto root = exact_sqrt(n + 1); root && prime_above_3(*root)) {
    out.push_back({n, *root, ForcedRule::sqrt_form});
  }
  return out;
}

Residue wolstenholme_check(u64 p) {
  if (p <= 3) throw Error(ErrorKind::inapplicable_prime, "Wolstenholme needs p > 3");
  const PrimeContext ctx(p);
  const u128 m = ctx.p_squared();
  // Running fraction num/den; every j < p is a unit mod p^2.
  u128 num = 0;
  u128 den = 1;
  for (u64 j = 1; j < p; ++j) {
    num = add_mod(mul_mod(num, j, m), den, m);
    den = mul_mod(den, j, m);
  }
  return {mul_mod(num, mod_inv(static_cast<i128>(den), m).value, m), m};
}

std::vector<u64> harmonic_scan(u64 p, std::optional<u64> bound) {
  if (p <= 3) throw Error(ErrorKind::inapplicable_prime, "harmonic_scan needs p > 3");
  const u64 limit = bound.value_or((p - 3) / 2);
  if (limit >= p) {
    throw Error(ErrorKind::index_out_of_range, "scan bound must stay below p");
  }
  std::vector<u64> hits;
  std::vector<u64> idx(static_cast<std::size_t>(std::min<u64>(limit, kDefaultBatchBlock)));
  u64 sum = 0;
  for (u64 start = 1; start <= limit; start += idx.size()) {
    const u64 len = std::min<u64>(idx.size(), limit - start + 1);
    idx.resize(len);
    std::iota(idx.begin(), idx.end(), start);
    const std::vector<u64> inv = batch_inv(idx, p);
    for (u64 i = 0; i < len; ++i) {
      sum = (sum + inv[i]) % p;
      if (sum == 0) hits.push_back(start + i);
    }
  }
  return hits;
}

std::vector<LinearFormHit> linear_form_scan(u64 k, u64 r, u64 n_max, bool primes_only) {
  if (k < 2 || r >= k) throw Error(ErrorKind::invalid_argument, "need k >= 2 and 0 <= r < k");
  if (n_max > kLinearFormCeiling) {
    throw Error(ErrorKind::resource_limit, "n_max above " + std::to_string(kLinearFormCeiling) +
                                               " is out of reach for exact numerators");
  }
  std::vector<LinearFormHit> hits;
  mpq_class h(0);
  for (u64 n = 1; n <= n_max; ++n) {
    h += mpq_class(1, static_cast<unsigned long>(n));  // canonicalized by mpq
    const u64 d = k * n + r;
    const bool prime = is_prime(d);
    if (primes_only && !prime) continue;
    if (mpz_divisible_ui_p(h.get_num_mpz_t(), static_cast<unsigned long>(d)) != 0) {
      hits.push_back({k, r, n, d, prime});
    }
  }
  return hits;
}

}  // namespace hsearch
