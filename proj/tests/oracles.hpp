// Independent reference implementations used to cross-check the library.
// Everything here recomputes from first principles with deliberately
// different mechanics (fixpoint closure instead of the DP sieve, bitmask
// gap-set enumeration instead of the tree, ascending instead of descending
// factorization search).
#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

namespace oracle {

// Plain facts about the semigroup generated by `gens`, computed by a
// saturating closure: start from {0} and keep adding generator translates
// until nothing changes inside the window.
struct BruteSemigroup {
  std::vector<std::int64_t> gens_raw;
  std::vector<bool> member;  // [0, bound]
  std::int64_t frobenius = -1;
  std::vector<std::int64_t> gaps;
  std::vector<std::int64_t> pf;
  std::vector<std::int64_t> minimal_gens;
  bool almost_symmetric = true;

  bool contains(std::int64_t x) const {
    if (x < 0) return false;
    if (x >= static_cast<std::int64_t>(member.size())) return true;
    return member[static_cast<std::size_t>(x)];
  }
};

inline BruteSemigroup brute_semigroup(std::vector<std::int64_t> gens) {
  BruteSemigroup s;
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  s.gens_raw = gens;
  const std::int64_t lo = gens.front();
  const std::int64_t hi = gens.back();

  std::int64_t bound = std::max<std::int64_t>(lo * hi + hi + 1, 64);
  for (;;) {
    std::vector<bool> mem(static_cast<std::size_t>(bound) + 1, false);
    mem[0] = true;
    bool changed = true;
    while (changed) {  // fixpoint of x in S => x + g in S
      changed = false;
      for (std::int64_t x = 0; x <= bound; ++x) {
        if (!mem[static_cast<std::size_t>(x)]) continue;
        for (std::int64_t g : gens) {
          const std::int64_t y = x + g;
          if (y <= bound && !mem[static_cast<std::size_t>(y)]) {
            mem[static_cast<std::size_t>(y)] = true;
            changed = true;
          }
        }
      }
    }
    bool tail_full = true;
    for (std::int64_t x = bound - lo + 1; x <= bound; ++x)
      if (!mem[static_cast<std::size_t>(x)]) tail_full = false;
    if (tail_full) {
      s.member = std::move(mem);
      break;
    }
    bound *= 2;
  }

  for (std::int64_t x = static_cast<std::int64_t>(s.member.size()) - 1; x >= 1; --x) {
    if (!s.member[static_cast<std::size_t>(x)]) {
      s.frobenius = x;
      break;
    }
  }
  for (std::int64_t x = 1; x <= s.frobenius; ++x)
    if (!s.contains(x)) s.gaps.push_back(x);

  // PF by the raw definition: x + s in S for every nonzero s in S, which is
  // equivalent to testing the generators.
  for (std::int64_t x : s.gaps) {
    bool ok = true;
    for (std::int64_t g : gens)
      if (!s.contains(x + g)) ok = false;
    if (ok) s.pf.push_back(x);
  }
  if (s.frobenius < 0) s.pf = {-1};

  // Minimal generators: nonzero members that are not a sum of two nonzero
  // members (only relevant below frobenius + 2*lo).
  for (std::int64_t x = 1; x <= s.frobenius + 2 * lo; ++x) {
    if (!s.contains(x)) continue;
    bool sum = false;
    for (std::int64_t a = 1; a < x && !sum; ++a)
      if (s.contains(a) && s.contains(x - a)) sum = true;
    if (!sum) s.minimal_gens.push_back(x);
  }

  for (std::int64_t x : s.gaps) {
    if (s.contains(s.frobenius - x)) continue;
    const bool x_pf = std::binary_search(s.pf.begin(), s.pf.end(), x);
    const bool fx_pf = std::binary_search(s.pf.begin(), s.pf.end(), s.frobenius - x);
    if (!x_pf || !fx_pf) {
      s.almost_symmetric = false;
      break;
    }
  }
  return s;
}

// Counts numerical semigroups per genus g <= max_genus by enumerating all
// candidate gap sets inside [1, 2*max_genus - 1] as bitmasks and keeping
// those whose complement is closed under addition. A set of g gaps always
// fits in that window because at least one of x, F - x is a gap for every
// x, so F <= 2g - 1.
inline std::vector<std::uint64_t> gap_set_counts(int max_genus) {
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(max_genus) + 1, 0);
  counts[0] = 1;  // the empty gap set
  if (max_genus == 0) return counts;
  const int top = 2 * max_genus - 1;
  const std::uint32_t full = (top >= 31) ? 0xFFFFFFFFu : ((1u << (top + 1)) - 1u);

  for (std::uint32_t gapbits = 1; gapbits <= (full >> 1); ++gapbits) {
    const std::uint32_t gaps = gapbits << 1;  // bit n <=> n is a gap, n in [1, top]
    const int genus = __builtin_popcount(gaps);
    if (genus > max_genus) continue;
    const std::uint32_t members = (~gaps) & full;  // bit 0 stays set
    bool closed = true;
    for (int x = 1; x <= top && closed; ++x) {
      if (!((members >> x) & 1u)) continue;
      if ((gaps >> x) & members) closed = false;  // some member y with x + y a gap
    }
    if (closed) ++counts[static_cast<std::size_t>(genus)];
  }
  return counts;
}

// All coefficient vectors over `gens` summing to value, found by ascending
// search from the smallest generator; sorted ascending for set comparison.
inline void brute_factor_rec(const std::vector<std::int64_t>& gens, std::size_t idx,
                             std::int64_t rem, std::vector<std::int64_t>& cur,
                             std::vector<std::vector<std::int64_t>>& out) {
  if (idx + 1 == gens.size()) {
    if (rem % gens[idx] == 0) {
      cur[idx] = rem / gens[idx];
      out.push_back(cur);
    }
    return;
  }
  for (std::int64_t c = 0; c * gens[idx] <= rem; ++c) {
    cur[idx] = c;
    brute_factor_rec(gens, idx + 1, rem - c * gens[idx], cur, out);
  }
}

inline std::vector<std::vector<std::int64_t>> brute_factorizations(
    const std::vector<std::int64_t>& gens, std::int64_t value) {
  std::vector<std::vector<std::int64_t>> out;
  if (value < 0) return out;
  std::vector<std::int64_t> cur(gens.size(), 0);
  brute_factor_rec(gens, 0, value, cur, out);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace oracle
