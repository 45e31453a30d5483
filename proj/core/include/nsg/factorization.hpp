#pragma once

#include <cstdint>
#include <vector>

#include "nsg/semigroup.hpp"

namespace nsg {

/// A factorization of an element over the minimal generators: coeffs[i] is
/// the multiplicity of generators()[i].
struct Factorization {
  std::vector<std::int64_t> coeffs;

  friend bool operator==(const Factorization& a, const Factorization& b) {
    return a.coeffs == b.coeffs;
  }
  friend bool operator<(const Factorization& a, const Factorization& b) {
    return a.coeffs < b.coeffs;
  }
};

/// The complete factorization set Z(s). Empty iff s is not in S (negative s
/// included). Enumeration order is deterministic: descending in the
/// coefficient of the largest generator, then the next largest, and so on.
std::vector<Factorization> factorizations(const NumericalSemigroup& s, std::int64_t value);

/// |Z(s)| by a coin-counting dynamic program; never materializes the set.
/// Saturates at UINT64_MAX. Throws std::invalid_argument for values large
/// enough that the DP table would be unreasonable (> 10^8).
std::uint64_t count_factorizations(const NumericalSemigroup& s, std::int64_t value);

}  // namespace nsg
