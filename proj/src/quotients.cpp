#include "hsearch/quotients.hpp"

#include <array>
#include <cstdlib>
#include <string>

namespace hsearch {

namespace {

// (value mod p^2) / p, requiring p | value.
u64 exact_quotient(u128 value, const PrimeContext& ctx, const char* what) {
  if (value % ctx.p() != 0) {
    throw Error(ErrorKind::internal_consistency,
                std::string(what) + " is not divisible by p = " + std::to_string(ctx.p()));
  }
  return static_cast<u64>(value / ctx.p());
}

SmallMatrix sun_matrix(u128 modulus) {
  static constexpr std::array<i128, 9> kEntries = {0, 3, -1, 1, -1, 1, 1, 0, 1};
  return SmallMatrix(3, kEntries, modulus);
}

}  // namespace

u64 fermat_quotient(u64 b, u64 p) {
  if (b < 2) throw Error(ErrorKind::invalid_argument, "Fermat quotient base must be >= 2");
  if (p < 3) throw Error(ErrorKind::inapplicable_prime, "Fermat quotient needs p >= 3");
  const PrimeContext ctx(p);
  if (b % p == 0) {
    throw Error(ErrorKind::non_invertible,
                std::to_string(p) + " divides the base " + std::to_string(b));
  }
  const u128 pw = mod_pow(b, p - 1, ctx.p_squared()).value;
  const u128 numerator = sub_mod(pw, 1, ctx.p_squared());
  return exact_quotient(numerator, ctx, "b^(p-1) - 1");
}

Residue lucas_u_mod(const LucasParams& params, u64 n, u128 modulus) {
  const std::array<i128, 4> entries = {params.P, -static_cast<i128>(params.Q), 1, 0};
  const SmallMatrix step(2, entries, modulus);
  // [[U_{n+1}, -Q U_n], [U_n, -Q U_{n-1}]]
  return {mat_pow(step, n).at(1, 0), modulus};
}

u64 lucas_quotient(const LucasParams& params, u64 p) {
  const PrimeContext ctx(p);
  const i128 guard = static_cast<i128>(2) * params.Q * params.D;
  if (reduce(guard, p) == 0) {
    throw Error(ErrorKind::inapplicable_prime,
                std::to_string(p) + " divides 2QD for U(" + std::to_string(params.P) + ", " +
                    std::to_string(params.Q) + ")");
  }
  const int symbol = jacobi(params.D, p);
  const u64 index = symbol == 1 ? p - 1 : p + 1;
  const u128 u = lucas_u_mod(params, index, ctx.p_squared()).value;
  return exact_quotient(u, ctx, "U_{p-(D/p)}");
}

Residue sun_f(u64 n, u128 modulus) { return {mat_pow(sun_matrix(modulus), n).at(0, 0), modulus}; }

u64 sun_z(u64 p) {
  if (p <= 3) throw Error(ErrorKind::inapplicable_prime, "Z(p) needs p > 3");
  const PrimeContext ctx(p);
  const u128 m = ctx.p_squared();
  const SmallMatrix step = sun_matrix(m);
  const SmallMatrix pow_prev = mat_pow(step, p - 1);
  const SmallMatrix pow_cur = pow_prev * step;
  const SmallMatrix pow_next = pow_cur * step;
  const u128 f_prev = pow_prev.at(0, 0);
  const u128 f_cur = pow_cur.at(0, 0);
  const u128 f_next = pow_next.at(0, 0);

  u128 combo = 0;
  switch (p % 9) {
    case 1:
    case 8:  // f(p+1) - 2
      combo = sub_mod(f_next, 2, m);
      break;
    case 2:
    case 7:  // f(p) - f(p-1) - 2
      combo = sub_mod(sub_mod(f_cur, f_prev, m), 2, m);
      break;
    case 4:
    case 5:  // -f(p+1) - f(p) + f(p-1) - 2
      combo = sub_mod(sub_mod(sub_mod(f_prev, f_next, m), f_cur, m), 2, m);
      break;
    default:
      throw Error(ErrorKind::internal_consistency, "prime > 3 divisible by 3");
  }
  const u64 q = exact_quotient(combo, ctx, "Z(p) numerator");
  return static_cast<u64>(static_cast<u128>(q % p) * 3 % p);
}

QuotientValue fermat_quotient_value(u64 b, u64 p) {
  return {QuotientKind::fermat, b, LucasParams{0, 0}, p, fermat_quotient(b, p)};
}

QuotientValue lucas_quotient_value(const LucasParams& params, u64 p) {
  return {QuotientKind::lucas, 0, params, p, lucas_quotient(params, p)};
}

QuotientValue sun_z_value(u64 p) {
  return {QuotientKind::sun_z, 0, LucasParams{0, 0}, p, sun_z(p)};
}

}  // namespace hsearch
