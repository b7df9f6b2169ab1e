#pragma once

// Residues of H_{floor(p/N)} mod p for 2 <= N <= 46.
//
// Four evaluators, from fastest to slowest:
//   h_formula   closed-form congruences for N in {2,3,4,5,6,8,10,12,24}
//   h_select    formula bases extended by interval sums of reciprocals
//               (24 -> 13..23 and 25..46, 8 -> 7, 12 -> 11, 18 -> 9 via Z(p))
//   h_direct    full summation with the quarter/half rearrangement
//   h_oracle    one modular inversion per term; ground truth for the others

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "hsearch/int128.hpp"

namespace hsearch {

inline constexpr int kMinN = 2;
inline constexpr int kMaxN = 46;
inline constexpr std::array<int, 9> kFormulaNs = {2, 3, 4, 5, 6, 8, 10, 12, 24};

bool has_formula(int N);

enum class Method { formula, extension, direct, oracle };

const char* to_string(Method method);

struct HarmonicResidue {
  u64 p = 0;
  int N = 0;
  u64 m = 0;  // floor(p/N)
  u64 residue = 0;
  Method method = Method::oracle;

  friend bool operator==(const HarmonicResidue&, const HarmonicResidue&) = default;
};

/// Sum of 1/j mod p for j = 1..n; requires n < p.
u64 h_oracle(u64 n, u64 p);

/// h_oracle evaluated at several indices with a single pass.
std::vector<u64> h_oracle_many(u64 p, std::span<const u64> indices);

u64 h_direct(u64 n, u64 p);

/// Sum of 1/j mod p for j in [a, b]; zero when a > b.
u64 partial_sum(u64 p, u64 a, u64 b);

/// Requires an odd prime p > N. For N >= 5 this keeps p away from every
/// discriminant and base the quotients use.
HarmonicResidue h_formula(int N, u64 p);

/// H_{floor(p/9)} from H_{floor(p/18)} using Z(p) and q_p(2); no extra inverses.
HarmonicResidue h9_from_h18(u64 p, const HarmonicResidue& h18);

/// A formula-computable base and the indices reached from it, in the order
/// they are computed. Each target's neighbour is target+1 below the base and
/// target-1 above it, so the reciprocal intervals tile without overlap.
struct ExtensionPlan {
  int base_N;
  std::vector<int> target_Ns;
  bool via_sun_z = false;  // 18 -> 9 uses Z(p) instead of a partial sum
};

/// Plans needed to reach every N in `ns`, ordered so bases are ready first.
std::vector<ExtensionPlan> extension_plans(std::span<const int> ns);

class HarmonicTable {
 public:
  explicit HarmonicTable(u64 p) : p_(p) {}

  u64 p() const noexcept { return p_; }
  bool has(int N) const;
  const HarmonicResidue& at(int N) const;
  void set(const HarmonicResidue& value);

  /// Number of reciprocals 1/j evaluated while building the table.
  u64 reciprocals_requested = 0;

 private:
  u64 p_;
  std::array<std::optional<HarmonicResidue>, kMaxN + 1> entries_{};
};

/// Residues for every N in `ns` (plus the intermediate bases they need).
/// Requires an odd prime p > N for each requested N.
HarmonicTable h_select(u64 p, std::span<const int> ns);

/// All N = 2..46; requires p > 46.
HarmonicTable h_all(u64 p);

}  // namespace hsearch
