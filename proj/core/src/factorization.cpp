#include "nsg/factorization.hpp"

#include <limits>
#include <numeric>

namespace nsg {
namespace {

constexpr std::int64_t kCountTableCap = 100'000'000;

struct Enumerator {
  const std::vector<std::int64_t>& gens;
  std::vector<std::int64_t> prefix_gcd;  // gcd of gens[0..i]
  std::vector<std::int64_t> coeffs;
  std::vector<Factorization>& out;

  // Assigns coefficients from the largest generator down; the remainder
  // must stay a multiple of the gcd of the generators still available.
  void walk(int idx, std::int64_t rem) {
    if (rem % prefix_gcd[static_cast<std::size_t>(idx)] != 0) return;
    if (idx == 0) {
      coeffs[0] = rem / gens[0];
      out.push_back(Factorization{coeffs});
      return;
    }
    const std::int64_t g = gens[static_cast<std::size_t>(idx)];
    for (std::int64_t c = rem / g; c >= 0; --c) {
      coeffs[static_cast<std::size_t>(idx)] = c;
      walk(idx - 1, rem - c * g);
    }
    coeffs[static_cast<std::size_t>(idx)] = 0;
  }
};

}  // namespace

std::vector<Factorization> factorizations(const NumericalSemigroup& s, std::int64_t value) {
  std::vector<Factorization> out;
  if (value < 0) return out;
  const auto& gens = s.generators();
  const int e = s.embedding_dim();
  std::vector<std::int64_t> prefix(static_cast<std::size_t>(e), 0);
  std::int64_t d = 0;
  for (int i = 0; i < e; ++i) {
    d = std::gcd(d, gens[static_cast<std::size_t>(i)]);
    prefix[static_cast<std::size_t>(i)] = d;
  }
  Enumerator en{gens, std::move(prefix), std::vector<std::int64_t>(static_cast<std::size_t>(e), 0),
                out};
  en.walk(e - 1, value);
  return out;
}

std::uint64_t count_factorizations(const NumericalSemigroup& s, std::int64_t value) {
  if (value < 0) return 0;
  if (value > kCountTableCap)
    throw std::invalid_argument("count_factorizations: value too large");
  std::vector<std::uint64_t> ways(static_cast<std::size_t>(value) + 1, 0);
  ways[0] = 1;
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  for (std::int64_t g : s.generators()) {
    for (std::int64_t v = g; v <= value; ++v) {
      std::uint64_t& w = ways[static_cast<std::size_t>(v)];
      const std::uint64_t add = ways[static_cast<std::size_t>(v - g)];
      w = (w > kMax - add) ? kMax : w + add;
    }
  }
  return ways[static_cast<std::size_t>(value)];
}

}  // namespace nsg
