#include "hsearch/modmath.hpp"

#include <algorithm>
#include <utility>

namespace hsearch {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::invalid_modulus: return "invalid modulus";
    case ErrorKind::non_invertible: return "non-invertible";
    case ErrorKind::invalid_argument: return "invalid argument";
    case ErrorKind::inapplicable_prime: return "inapplicable prime";
    case ErrorKind::internal_consistency: return "internal consistency";
    case ErrorKind::index_out_of_range: return "index out of range";
    case ErrorKind::resource_limit: return "resource limit";
    case ErrorKind::config_mismatch: return "config mismatch";
    case ErrorKind::parse: return "parse error";
  }
  return "unknown";
}

std::string to_string(u128 value) {
  if (value == 0) return "0";
  std::string out;
  while (value != 0) {
    out.push_back(static_cast<char>('0' + static_cast<int>(value % 10)));
    value /= 10;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

std::string to_string(i128 value) {
  if (value < 0) return "-" + to_string(static_cast<u128>(-(value + 1)) + 1);
  return to_string(static_cast<u128>(value));
}

u128 parse_u128(std::string_view text) {
  if (text.empty()) throw Error(ErrorKind::parse, "empty integer");
  constexpr u128 kMax = ~u128{0};
  u128 value = 0;
  for (char c : text) {
    if (c < '0' || c > '9') {
      throw Error(ErrorKind::parse, "not a non-negative integer: '" + std::string(text) + "'");
    }
    const auto digit = static_cast<unsigned>(c - '0');
    if (value > (kMax - digit) / 10) {
      throw Error(ErrorKind::parse, "integer overflow: '" + std::string(text) + "'");
    }
    value = value * 10 + digit;
  }
  return value;
}

PrimeContext::PrimeContext(u64 p) : p_(p), p_squared_(static_cast<u128>(p) * p) {
  if (p >= kMaxPrime) {
    throw Error(ErrorKind::invalid_argument, "prime " + std::to_string(p) + " exceeds 2^40");
  }
  if (!is_prime(p)) {
    throw Error(ErrorKind::invalid_argument, std::to_string(p) + " is not prime");
  }
}

u128 reduce(i128 value, u128 modulus) {
  if (value >= 0) return static_cast<u128>(value) % modulus;
  const u128 magnitude = static_cast<u128>(-(value + 1)) + 1;
  const u128 r = magnitude % modulus;
  return r == 0 ? 0 : modulus - r;
}

namespace {

void require_modulus(u128 modulus) {
  if (modulus < 2) throw Error(ErrorKind::invalid_modulus, "modulus must be at least 2");
  if (modulus >= kMaxModulus) throw Error(ErrorKind::invalid_modulus, "modulus exceeds 2^96");
}

}  // namespace

Residue mod_pow(i128 base, u64 exponent, u128 modulus) {
  require_modulus(modulus);
  u128 b = reduce(base, modulus);
  u128 result = 1;
  while (exponent != 0) {
    if (exponent & 1) result = mul_mod(result, b, modulus);
    b = mul_mod(b, b, modulus);
    exponent >>= 1;
  }
  return {result, modulus};
}

Residue mod_inv(i128 a, u128 modulus) {
  require_modulus(modulus);
  // modulus < 2^96, so every remainder and Bezout coefficient fits in i128.
  i128 old_r = static_cast<i128>(reduce(a, modulus));
  i128 r = static_cast<i128>(modulus);
  i128 old_s = 1;
  i128 s = 0;
  while (r != 0) {
    const i128 q = old_r / r;
    old_r = std::exchange(r, old_r - q * r);
    old_s = std::exchange(s, old_s - q * s);
  }
  if (old_r != 1) {
    throw Error(ErrorKind::non_invertible,
                to_string(a) + " is not invertible modulo " + to_string(modulus));
  }
  return {reduce(old_s, modulus), modulus};
}

u64 inv_mod_u64(u64 a, u64 m) {
  i64 old_r = static_cast<i64>(a % m);
  i64 r = static_cast<i64>(m);
  i64 old_s = 1;
  i64 s = 0;
  while (r != 0) {
    const i64 q = old_r / r;
    old_r = std::exchange(r, old_r - q * r);
    old_s = std::exchange(s, old_s - q * s);
  }
  if (old_r != 1) {
    throw Error(ErrorKind::non_invertible,
                std::to_string(a) + " is not invertible modulo " + std::to_string(m));
  }
  return old_s < 0 ? static_cast<u64>(old_s + static_cast<i64>(m)) : static_cast<u64>(old_s);
}

std::vector<u64> batch_inv(std::span<const u64> values, u64 p, std::size_t block_size) {
  if (p < 2) throw Error(ErrorKind::invalid_modulus, "modulus must be at least 2");
  if (block_size == 0) throw Error(ErrorKind::invalid_argument, "block size must be positive");
  std::vector<u64> out(values.size());
  std::vector<u64> prefix(std::min(block_size, values.size()));
  for (std::size_t start = 0; start < values.size(); start += block_size) {
    const std::size_t len = std::min(block_size, values.size() - start);
    u64 acc = 1;
    for (std::size_t i = 0; i < len; ++i) {
      const u64 v = values[start + i] % p;
      if (v == 0) {
        throw Error(ErrorKind::non_invertible,
                    "element " + std::to_string(start + i) + " (" +
                        std::to_string(values[start + i]) + ") is divisible by " +
                        std::to_string(p),
                    start + i);
      }
      acc = static_cast<u64>(static_cast<u128>(acc) * v % p);
      prefix[i] = acc;
    }
    u64 inv = inv_mod_u64(acc, p);
    for (std::size_t i = len; i-- > 1;) {
      out[start + i] = static_cast<u64>(static_cast<u128>(inv) * prefix[i - 1] % p);
      inv = static_cast<u64>(static_cast<u128>(inv) * (values[start + i] % p) % p);
    }
    out[start] = inv;
  }
  return out;
}

int jacobi(i128 a, u128 n) {
  if (n == 0 || (n & 1) == 0) {
    throw Error(ErrorKind::invalid_argument, "Jacobi symbol needs an odd positive modulus");
  }
  u128 x = reduce(a, n);
  u128 m = n;
  int result = 1;
  while (x != 0) {
    int shift = 0;
    while ((x & 1) == 0) {
      x >>= 1;
      ++shift;
    }
    const auto r8 = static_cast<unsigned>(m % 8);
    if ((shift & 1) != 0 && (r8 == 3 || r8 == 5)) result = -result;
    std::swap(x, m);
    if (x % 4 == 3 && m % 4 == 3) result = -result;
    x %= m;
  }
  return m == 1 ? result : 0;
}

namespace {

bool miller_rabin_round(u128 n, u128 d, int s, u64 base) {
  u128 b = base % n;
  u128 r = 1;
  for (u128 e = d; e != 0; e >>= 1) {
    if (e & 1) r = mul_mod(r, b, n);
    b = mul_mod(b, b, n);
  }
  if (r == 1 || r == n - 1) return true;
  for (int i = 1; i < s; ++i) {
    r = mul_mod(r, r, n);
    if (r == n - 1) return true;
  }
  return false;
}

}  // namespace

bool is_prime(u128 n) {
  static constexpr std::array<u64, 13> kBases = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};
  if (n < 2) return false;
  for (u64 b : kBases) {
    if (n == b) return true;
    if (n % b == 0) return false;
  }
  if (n < 43 * 43) return true;
  if (n >= (u128{1} << 81)) {
    throw Error(ErrorKind::resource_limit, "primality test limited to n < 2^81");
  }
  u128 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  return std::all_of(kBases.begin(), kBases.end(),
                     [&](u64 base) { return miller_rabin_round(n, d, s, base); });
}

SmallMatrix::SmallMatrix(int dimension, u128 modulus) : dim_(dimension), modulus_(modulus) {
  if (dimension != 2 && dimension != 3) {
    throw Error(ErrorKind::invalid_argument, "matrix dimension must be 2 or 3");
  }
  require_modulus(modulus);
}

SmallMatrix::SmallMatrix(int dimension, std::span<const i128> entries, u128 modulus)
    : SmallMatrix(dimension, modulus) {
  const auto count = static_cast<std::size_t>(dimension * dimension);
  if (entries.size() != count) {
    throw Error(ErrorKind::invalid_argument, "matrix entry count does not match dimension");
  }
  for (std::size_t i = 0; i < count; ++i) e_[i] = reduce(entries[i], modulus);
}

SmallMatrix SmallMatrix::identity(int dimension, u128 modulus) {
  SmallMatrix id(dimension, modulus);
  for (int i = 0; i < dimension; ++i) id.e_[static_cast<std::size_t>(i * dimension + i)] = 1 % modulus;
  return id;
}

SmallMatrix SmallMatrix::operator*(const SmallMatrix& rhs) const {
  if (dim_ != rhs.dim_ || modulus_ != rhs.modulus_) {
    throw Error(ErrorKind::invalid_argument, "matrix shape or modulus mismatch");
  }
  SmallMatrix out(dim_, modulus_);
  for (int i = 0; i < dim_; ++i) {
    for (int j = 0; j < dim_; ++j) {
      u128 acc = 0;
      for (int k = 0; k < dim_; ++k) {
        acc = add_mod(acc, mul_mod(at(i, k), rhs.at(k, j), modulus_), modulus_);
      }
      out.e_[static_cast<std::size_t>(i * dim_ + j)] = acc;
    }
  }
  return out;
}

SmallMatrix mat_pow(const SmallMatrix& m, u64 n) {
  SmallMatrix result = SmallMatrix::identity(m.dimension(), m.modulus());
  SmallMatrix base = m;
  while (n != 0) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n != 0) base = base * base;
  }
  return result;
}

}  // namespace hsearch
