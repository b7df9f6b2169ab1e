#include "hsearch/harmonic.hpp"

#include <algorithm>
#include <string>

#include "hsearch/error.hpp"
#include "hsearch/kernels.hpp"
#include "hsearch/modmath.hpp"
#include "hsearch/quotients.hpp"

namespace hsearch {

namespace {

// Arithmetic mod a prime p < 2^40.
struct ModP {
  u64 p;

  u64 add(u64 a, u64 b) const { return static_cast<u64>((static_cast<u128>(a) + b) % p); }
  u64 sub(u64 a, u64 b) const { return a >= b ? a - b : a + p - b; }
  u64 mul(u64 a, u64 b) const { return static_cast<u64>(static_cast<u128>(a) * b % p); }
  u64 inv(u64 a) const { return inv_mod_u64(a, p); }
  // (num/den) * value, with a signed numerator
  u64 scaled(i64 num, u64 den, u64 value) const {
    const u64 coef = mul(static_cast<u64>(reduce(num, p)), inv(den));
    return mul(coef, value);
  }
  u64 sign(int s, u64 value) const { return s < 0 ? sub(0, value) : value; }
};

void require_index(u64 n, u64 p) {
  if (n >= p) {
    throw Error(ErrorKind::index_out_of_range,
                "H_" + std::to_string(n) + " needs the reciprocal of a multiple of " +
                    std::to_string(p));
  }
}

void require_n(int N) {
  if (N < kMinN || N > kMaxN) {
    throw Error(ErrorKind::invalid_argument, "N must lie in [2, 46], got " + std::to_string(N));
  }
}

}  // namespace

bool has_formula(int N) {
  return std::find(kFormulaNs.begin(), kFormulaNs.end(), N) != kFormulaNs.end();
}

const char* to_string(Method method) {
  switch (method) {
    case Method::formula: return "formula";
    case Method::extension: return "extension";
    case Method::direct: return "direct";
    case Method::oracle: return "oracle";
  }
  return "unknown";
}

u64 h_oracle(u64 n, u64 p) {
  require_index(n, p);
  u64 sum = 0;
  for (u64 j = 1; j <= n; ++j) {
    sum += inv_mod_u64(j, p);
    if (sum >= p) sum -= p;
  }
  return sum;
}

std::vector<u64> h_oracle_many(u64 p, std::span<const u64> indices) {
  std::vector<u64> out(indices.size());
  if (indices.empty()) return out;
  const u64 top = *std::max_element(indices.begin(), indices.end());
  require_index(top, p);
  std::vector<std::size_t> order(indices.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return indices[a] < indices[b]; });
  u64 sum = 0;
  u64 j = 0;
  for (std::size_t k : order) {
    for (; j < indices[k]; ) {
      ++j;
      sum += inv_mod_u64(j, p);
      if (sum >= p) sum -= p;
    }
    out[k] = sum;
  }
  return out;
}

u64 h_direct(u64 n, u64 p) {
  require_index(n, p);
  if (p == 2) return kernels::reciprocal_sum(p, 1, n);
  const ModP mp{p};
  const u64 quarter = n / 4;
  const u64 half = n / 2;
  const u64 head = kernels::reciprocal_sum_parallel(p, 1, quarter);
  const u64 middle = kernels::reciprocal_sum_parallel(p, quarter + 1, half);
  const u64 first_odd = (half + 1) | 1;
  const u64 tail = kernels::reciprocal_sum_parallel(p, first_odd, n, 2);
  return mp.add(mp.add(head, mp.scaled(3, 2, middle)), tail);
}

u64 partial_sum(u64 p, u64 a, u64 b) {
  if (a > b) return 0;
  return kernels::reciprocal_sum_parallel(p, a, b);
}

HarmonicResidue h_formula(int N, u64 p) {
  if (!has_formula(N)) {
    throw Error(ErrorKind::invalid_argument,
                "no closed form for N = " + std::to_string(N) +
                    "; supported: 2, 3, 4, 5, 6, 8, 10, 12, 24");
  }
  if (p <= static_cast<u64>(N) || p == 2) {
    throw Error(ErrorKind::inapplicable_prime,
                "closed form for N = " + std::to_string(N) + " needs an odd prime p > N");
  }
  const PrimeContext ctx(p);
  const ModP mp{p};
  const u64 q2 = fermat_quotient(2, p);
  u64 r = 0;
  switch (N) {
    case 2:
      r = mp.scaled(-2, 1, q2);
      break;
    case 3:
      r = mp.scaled(-3, 2, fermat_quotient(3, p));
      break;
    case 4:
      r = mp.scaled(-3, 1, q2);
      break;
    case 5: {
      const u64 fib = lucas_quotient(LucasParams::fibonacci(), p);
      r = mp.scaled(-5, 4, mp.add(fermat_quotient(5, p), fib));
      break;
    }
    case 6:
      r = mp.add(mp.scaled(-2, 1, q2), mp.scaled(-3, 2, fermat_quotient(3, p)));
      break;
    case 8:
      r = mp.add(mp.scaled(-4, 1, q2), mp.scaled(-2, 1, lucas_quotient(LucasParams::pell(), p)));
      break;
    case 10: {
      const u64 fib = lucas_quotient(LucasParams::fibonacci(), p);
      r = mp.add(mp.add(mp.scaled(-2, 1, q2), mp.scaled(-5, 4, fermat_quotient(5, p))),
                 mp.scaled(-15, 4, fib));
      break;
    }
    case 12: {
      const u64 a = mp.sign(jacobi(3, p), lucas_quotient(LucasParams::a001353(), p));
      r = mp.add(mp.add(mp.scaled(-3, 1, q2), mp.scaled(-3, 2, fermat_quotient(3, p))),
                 mp.scaled(-3, 1, a));
      break;
    }
    case 24: {
      const u64 pell = lucas_quotient(LucasParams::pell(), p);
      const u64 a = mp.sign(jacobi(3, p), lucas_quotient(LucasParams::a001353(), p));
      const u64 b = mp.sign(jacobi(6, p), lucas_quotient(LucasParams::a004189(), p));
      r = mp.scaled(-4, 1, q2);
      r = mp.add(r, mp.scaled(-3, 2, fermat_quotient(3, p)));
      r = mp.add(r, mp.scaled(-4, 1, pell));
      r = mp.add(r, mp.scaled(-3, 1, a));
      r = mp.add(r, mp.scaled(-6, 1, b));
      break;
    }
    default:
      break;
  }
  return {p, N, p / static_cast<u64>(N), r, Method::formula};
}

HarmonicResidue h9_from_h18(u64 p, const HarmonicResidue& h18) {
  if (h18.p != p || h18.N != 18) {
    throw Error(ErrorKind::invalid_argument, "h9_from_h18 needs the N = 18 residue for the same p");
  }
  if (p <= 18) throw Error(ErrorKind::inapplicable_prime, "h9_from_h18 needs p > 18");
  const ModP mp{p};
  const u64 r = mp.add(mp.add(h18.residue, sun_z(p)), mp.scaled(2, 1, fermat_quotient(2, p)));
  return {p, 9, p / 9, r, Method::extension};
}

std::vector<ExtensionPlan> extension_plans(std::span<const int> ns) {
  bool need7 = false;
  bool need9 = false;
  bool need11 = false;
  int low = 24;   // smallest N in 13..23 reached from 24
  int high = 24;  // largest N in 25..46 reached from 24
  for (int N : ns) {
    require_n(N);
    if (N == 7) need7 = true;
    if (N == 11) need11 = true;
    if (N == 9) {
      need9 = true;
      low = std::min(low, 18);
    }
    if (N >= 13 && N < 24) low = std::min(low, N);
    if (N > 24) high = std::max(high, N);
  }
  std::vector<ExtensionPlan> plans;
  if (low < 24 || high > 24) {
    ExtensionPlan plan{24, {}};
    for (int N = 23; N >= low; --N) plan.target_Ns.push_back(N);
    for (int N = 25; N <= high; ++N) plan.target_Ns.push_back(N);
    plans.push_back(std::move(plan));
  }
  if (need7) plans.push_back({8, {7}});
  if (need11) plans.push_back({12, {11}});
  if (need9) plans.push_back({18, {9}, true});
  return plans;
}

bool HarmonicTable::has(int N) const {
  return N >= 0 && N <= kMaxN && entries_[static_cast<std::size_t>(N)].has_value();
}

const HarmonicResidue& HarmonicTable::at(int N) const {
  if (!has(N)) {
    throw Error(ErrorKind::invalid_argument, "N = " + std::to_string(N) + " not in table");
  }
  return *entries_[static_cast<std::size_t>(N)];
}

void HarmonicTable::set(const HarmonicResidue& value) {
  require_n(value.N);
  entries_[static_cast<std::size_t>(value.N)] = value;
}

HarmonicTable h_select(u64 p, std::span<const int> ns) {
  const PrimeContext ctx(p);
  if (p < 3) throw Error(ErrorKind::inapplicable_prime, "pipeline needs an odd prime");
  for (int N : ns) {
    require_n(N);
    if (p <= static_cast<u64>(N)) {
      throw Error(ErrorKind::inapplicable_prime,
                  "p = " + std::to_string(p) + " must exceed N = " + std::to_string(N));
    }
  }
  HarmonicTable table(p);
  const ModP mp{p};
  const auto index = [p](int N) { return p / static_cast<u64>(N); };
  const auto ensure_formula = [&](int N) {
    if (table.has(N)) return;
    // p <= N only arises for intermediate bases, where the sum is empty.
    table.set(index(N) == 0 ? HarmonicResidue{p, N, 0, 0, Method::formula} : h_formula(N, p));
  };

  const std::vector<ExtensionPlan> plans = extension_plans(ns);
  for (int N : ns) {
    if (has_formula(N)) ensure_formula(N);
  }
  for (const ExtensionPlan& plan : plans) {
    if (plan.via_sun_z) {
      table.set(h9_from_h18(p, table.at(18)));
      continue;
    }
    ensure_formula(plan.base_N);
    for (int target : plan.target_Ns) {
      const int neighbour = target < plan.base_N ? target + 1 : target - 1;
      const HarmonicResidue& from = table.at(neighbour);
      const u64 m = index(target);
      u64 r = 0;
      if (target < neighbour) {  // larger index: add (m_neighbour, m]
        r = mp.add(from.residue, partial_sum(p, from.m + 1, m));
        table.reciprocals_requested += m - from.m;
      } else {  // smaller index: remove (m, m_neighbour]
        r = mp.sub(from.residue, partial_sum(p, m + 1, from.m));
        table.reciprocals_requested += from.m - m;
      }
      table.set({p, target, m, r, Method::extension});
    }
  }
  return table;
}

HarmonicTable h_all(u64 p) {
  if (p <= static_cast<u64>(kMaxN)) {
    throw Error(ErrorKind::inapplicable_prime, "h_all needs p > 46");
  }
  std::array<int, kMaxN - kMinN + 1> all{};
  for (int N = kMinN; N <= kMaxN; ++N) all[static_cast<std::size_t>(N - kMinN)] = N;
  return h_select(p, all);
}

}  // namespace hsearch
