#pragma once

// Fermat quotients, Lucas-sequence quotients and the Z(p) composition built
// on the recurrence f(0)=1, f(1)=0, f(2)=2, f(n)=3f(n-2)-f(n-3).
//
// Every quotient is evaluated modulo p^2 and divided exactly by p; an
// inexact division raises internal_consistency, which always indicates a
// wrong index or Jacobi sign upstream.

#include "hsearch/int128.hpp"
#include "hsearch/modmath.hpp"

namespace hsearch {

/// Parameters of U_n(P, Q): U_0 = 0, U_1 = 1, U_n = P U_{n-1} - Q U_{n-2}.
struct LucasParams {
  i64 P;
  i64 Q;
  i64 D;  // P^2 - 4Q

  constexpr LucasParams(i64 p, i64 q) : P(p), Q(q), D(p * p - 4 * q) {}

  static constexpr LucasParams fibonacci() { return {1, -1}; }
  static constexpr LucasParams pell() { return {2, -1}; }
  static constexpr LucasParams a001353() { return {4, 1}; }   // 1, 4, 15, 56, 209, ...
  static constexpr LucasParams a004189() { return {10, 1}; }  // 1, 10, 99, 980, ...

  friend constexpr bool operator==(const LucasParams&, const LucasParams&) = default;
};

enum class QuotientKind { fermat, lucas, sun_z };

/// A quotient residue mod p tagged with what it is a quotient of.
struct QuotientValue {
  QuotientKind kind;
  u64 base = 0;                            // fermat only
  LucasParams params = LucasParams{0, 0};  // lucas only
  u64 p = 0;
  u64 residue = 0;
};

/// q_p(b) = (b^(p-1) - 1)/p mod p.
u64 fermat_quotient(u64 b, u64 p);

Residue lucas_u_mod(const LucasParams& params, u64 n, u128 modulus);

/// U_{p-(D/p)}(P, Q)/p mod p; requires p not dividing 2QD.
u64 lucas_quotient(const LucasParams& params, u64 p);

Residue sun_f(u64 n, u128 modulus);

/// Z(p) = s(1,18) - 2 q_p(2) mod p, evaluated through f and the class of p mod 9.
u64 sun_z(u64 p);

QuotientValue fermat_quotient_value(u64 b, u64 p);
QuotientValue lucas_quotient_value(const LucasParams& params, u64 p);
QuotientValue sun_z_value(u64 p);

}  // namespace hsearch
