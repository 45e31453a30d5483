#include "nsg/semigroup.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace nsg {
namespace {

// Forward dynamic-programming sieve: marks every sum of generators in
// [0, bound]. One pass serves both the membership table and the Apery set.
std::vector<bool> sieve(const std::vector<std::int64_t>& gens, std::int64_t bound) {
  std::vector<bool> member(static_cast<std::size_t>(bound) + 1, false);
  member[0] = true;
  for (std::int64_t x = 1; x <= bound; ++x) {
    for (std::int64_t g : gens) {
      if (g > x) break;
      if (member[static_cast<std::size_t>(x - g)]) {
        member[static_cast<std::size_t>(x)] = true;
        break;
      }
    }
  }
  return member;
}

bool tail_is_full(const std::vector<bool>& member, std::int64_t width) {
  if (static_cast<std::int64_t>(member.size()) < width) return false;
  for (std::size_t i = member.size() - static_cast<std::size_t>(width); i < member.size(); ++i)
    if (!member[i]) return false;
  return true;
}

}  // namespace

NumericalSemigroup NumericalSemigroup::naturals() {
  NumericalSemigroup s;
  s.gens_ = {1};
  s.multiplicity_ = 1;
  s.frobenius_ = -1;
  s.member_ = {true};
  s.apery_ = {0};
  s.gaps_ = {};
  s.pf_ = {-1};
  s.almost_symmetric_ = true;
  s.symmetric_ = true;
  return s;
}

NumericalSemigroup::NumericalSemigroup(std::vector<std::int64_t> raw_generators) {
  if (raw_generators.empty()) throw std::invalid_argument("generator list is empty");
  for (std::int64_t g : raw_generators)
    if (g < 1) throw std::invalid_argument("generators must be positive");

  std::sort(raw_generators.begin(), raw_generators.end());
  raw_generators.erase(std::unique(raw_generators.begin(), raw_generators.end()),
                       raw_generators.end());

  std::int64_t d = 0;
  for (std::int64_t g : raw_generators) d = std::gcd(d, g);
  if (d != 1)
    throw non_coprime_error("gcd of generators is " + std::to_string(d) + ", expected 1");

  if (raw_generators.front() == 1) {
    *this = naturals();
    return;
  }

  // Minimalization: walk the candidates in ascending order and drop any
  // value already reachable from the retained ones. The minimal system of
  // a numerical semigroup is unique, so greedy order is safe.
  const std::int64_t top = raw_generators.back();
  std::vector<bool> reach(static_cast<std::size_t>(top) + 1, false);
  reach[0] = true;
  for (std::int64_t g : raw_generators) {
    if (reach[static_cast<std::size_t>(g)]) continue;
    gens_.push_back(g);
    for (std::int64_t v = g; v <= top; ++v)
      if (reach[static_cast<std::size_t>(v - g)]) reach[static_cast<std::size_t>(v)] = true;
  }

  multiplicity_ = gens_.front();

  // Membership sieve over an adaptive bound: once `multiplicity` consecutive
  // members appear, everything beyond them is in S.
  std::int64_t bound =
      std::max<std::int64_t>((multiplicity_ - 1) * (gens_.back() - 1) + gens_.back() + 2,
                             2 * gens_.back());
  std::vector<bool> member = sieve(gens_, bound);
  while (!tail_is_full(member, multiplicity_)) {
    bound *= 2;
    member = sieve(gens_, bound);
  }

  frobenius_ = -1;
  for (std::int64_t x = bound; x >= 1; --x) {
    if (!member[static_cast<std::size_t>(x)]) {
      frobenius_ = x;
      break;
    }
  }

  member.resize(static_cast<std::size_t>(frobenius_ + gens_.back()) + 1, true);
  member_ = std::move(member);
  finish();
}

NumericalSemigroup NumericalSemigroup::from_membership(
    std::vector<std::int64_t> minimal_generators, const std::vector<bool>& members,
    std::int64_t frobenius) {
  if (minimal_generators.size() == 1 && minimal_generators[0] == 1) return naturals();
  NumericalSemigroup s;
  s.gens_ = std::move(minimal_generators);
  s.multiplicity_ = s.gens_.front();
  s.frobenius_ = frobenius;
  const std::size_t size = static_cast<std::size_t>(frobenius + s.gens_.back()) + 1;
  s.member_.assign(size, true);
  for (std::int64_t x = 0; x <= frobenius; ++x)
    s.member_[static_cast<std::size_t>(x)] =
        x < static_cast<std::int64_t>(members.size()) ? static_cast<bool>(members[static_cast<std::size_t>(x)]) : true;
  s.finish();
  return s;
}

void NumericalSemigroup::finish() {
  const std::int64_t m = multiplicity_;

  // Apery set w.r.t. the multiplicity, read off the membership table.
  apery_.assign(static_cast<std::size_t>(m), -1);
  std::int64_t found = 0;
  for (std::int64_t x = 0; x <= frobenius_ + m && found < m; ++x) {
    if (!contains(x)) continue;
    std::size_t r = static_cast<std::size_t>(x % m);
    if (apery_[r] < 0) {
      apery_[r] = x;
      ++found;
    }
  }

  // Every Apery class contributes floor(apery[r]/m) gaps.
  gaps_.clear();
  for (std::int64_t r = 0; r < m; ++r) {
    for (std::int64_t x = apery_[static_cast<std::size_t>(r)] - m; x >= 1; x -= m)
      gaps_.push_back(x);
  }
  std::sort(gaps_.begin(), gaps_.end());

  pf_.clear();
  for (std::int64_t x : gaps_) {
    bool pf = true;
    for (std::int64_t g : gens_) {
      if (!contains(x + g)) {
        pf = false;
        break;
      }
    }
    if (pf) pf_.push_back(x);
  }

  symmetric_ = true;
  almost_symmetric_ = true;
  for (std::int64_t x : gaps_) {
    if (contains(frobenius_ - x)) continue;
    symmetric_ = false;
    if (!is_pseudo_frobenius(x) || !is_pseudo_frobenius(frobenius_ - x)) {
      almost_symmetric_ = false;
      break;
    }
  }
}

bool NumericalSemigroup::is_pseudo_frobenius(std::int64_t x) const noexcept {
  return std::binary_search(pf_.begin(), pf_.end(), x);
}

std::vector<std::int64_t> NumericalSemigroup::apery_set(std::int64_t n) const {
  if (n < 1) throw std::invalid_argument("apery_set: n must be >= 1");
  if (!contains(n))
    throw not_member_error("apery_set: " + std::to_string(n) + " is not in the semigroup");
  std::vector<std::int64_t> ap(static_cast<std::size_t>(n), -1);
  std::int64_t found = 0;
  for (std::int64_t x = 0; found < n; ++x) {
    if (!contains(x)) continue;
    std::size_t r = static_cast<std::size_t>(x % n);
    if (ap[r] < 0) {
      ap[r] = x;
      ++found;
    }
  }
  return ap;
}

std::vector<std::int64_t> pf_via_maximal_gaps(const NumericalSemigroup& s) {
  if (s.frobenius() < 0) return {-1};  // Z \ N has maximum -1
  std::vector<std::int64_t> out;
  const auto& gaps = s.gaps();
  for (std::int64_t x : gaps) {
    bool maximal = true;
    for (std::int64_t y : gaps) {
      if (y != x && s.contains(y - x)) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(x);
  }
  return out;
}

}  // namespace nsg
