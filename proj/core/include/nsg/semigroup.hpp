#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace nsg {

/// Base class for recoverable domain errors raised by the library.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The generators have gcd != 1, so the complement would be infinite.
class non_coprime_error : public error {
 public:
  using error::error;
};

/// An argument that must belong to the semigroup does not.
class not_member_error : public error {
 public:
  using error::error;
};

/// An argument that must lie outside the semigroup belongs to it.
class in_semigroup_error : public error {
 public:
  using error::error;
};

/// An argument that must be a pseudo-Frobenius number is not.
class not_pseudo_frobenius_error : public error {
 public:
  using error::error;
};

/// Two values that must sum to the Frobenius number do not.
class value_mismatch_error : public error {
 public:
  using error::error;
};

/// A numerical semigroup: a cofinite submonoid of (N, +), stored with its
/// minimal generating system and all first-order invariants precomputed.
///
/// Values are immutable after construction, so instances can be shared
/// freely across threads. All integers are 64-bit signed; the enumeration
/// bounds used elsewhere in this project keep every quantity far below
/// overflow.
class NumericalSemigroup {
 public:
  /// Builds the semigroup generated by `raw_generators`. The input is
  /// reduced to the unique minimal generating system; every cached
  /// invariant (membership table, Apery set, Frobenius number, gaps,
  /// pseudo-Frobenius set) is populated here.
  ///
  /// Throws non_coprime_error if gcd(raw_generators) != 1 and
  /// std::invalid_argument if the list is empty or contains values < 1.
  explicit NumericalSemigroup(std::vector<std::int64_t> raw_generators);

  /// The semigroup N itself (generated by {1}; Frobenius number -1).
  static NumericalSemigroup naturals();

  /// Internal factory used by the tree enumerator: builds a semigroup from
  /// an already-minimal generator list and a membership table covering
  /// [0, frobenius]. `members` may be shorter than the canonical table;
  /// anything past `frobenius` is treated as present.
  static NumericalSemigroup from_membership(std::vector<std::int64_t> minimal_generators,
                                            const std::vector<bool>& members,
                                            std::int64_t frobenius);

  const std::vector<std::int64_t>& generators() const noexcept { return gens_; }
  std::int64_t multiplicity() const noexcept { return multiplicity_; }
  int embedding_dim() const noexcept { return static_cast<int>(gens_.size()); }

  /// Largest integer not in S; -1 for S = N.
  std::int64_t frobenius() const noexcept { return frobenius_; }

  /// Number of gaps.
  std::int64_t genus() const noexcept { return static_cast<std::int64_t>(gaps_.size()); }

  /// The sorted list of gaps (positive integers outside S).
  const std::vector<std::int64_t>& gaps() const noexcept { return gaps_; }

  /// Apery set with respect to the multiplicity, indexed by residue class:
  /// apery()[r] is the least element of S congruent to r.
  const std::vector<std::int64_t>& apery() const noexcept { return apery_; }

  /// Apery set with respect to an arbitrary nonzero element n of S.
  /// Throws not_member_error if n is not in S.
  std::vector<std::int64_t> apery_set(std::int64_t n) const;

  /// Sorted pseudo-Frobenius numbers. For S = N this is {-1}, following the
  /// literal definition over Z \ S.
  const std::vector<std::int64_t>& pseudo_frobenius() const noexcept { return pf_; }

  /// |PF(S)|.
  std::int64_t type() const noexcept { return static_cast<std::int64_t>(pf_.size()); }

  bool contains(std::int64_t x) const noexcept {
    if (x < 0) return false;
    if (x > frobenius_) return true;
    return member_[static_cast<std::size_t>(x)];
  }

  /// The partial order induced by S: x <= y iff y - x is in S.
  bool leq(std::int64_t x, std::int64_t y) const noexcept { return contains(y - x); }

  bool is_pseudo_frobenius(std::int64_t x) const noexcept;

  /// True iff every gap x with frobenius() - x also a gap satisfies
  /// {x, frobenius() - x} subset of PF(S).
  bool almost_symmetric() const noexcept { return almost_symmetric_; }

  /// True iff no gap x has frobenius() - x also a gap.
  bool symmetric() const noexcept { return symmetric_; }

  bool operator==(const NumericalSemigroup& o) const noexcept { return gens_ == o.gens_; }

 private:
  NumericalSemigroup() = default;
  void finish();  // derives apery/gaps/pf/flags from gens_ + member_ + frobenius_

  std::vector<std::int64_t> gens_;   // minimal system, strictly increasing
  std::int64_t multiplicity_ = 1;
  std::int64_t frobenius_ = -1;
  std::vector<bool> member_;         // [0, frobenius + max generator]
  std::vector<std::int64_t> apery_;  // w.r.t. multiplicity
  std::vector<std::int64_t> gaps_;
  std::vector<std::int64_t> pf_;
  bool almost_symmetric_ = true;
  bool symmetric_ = true;
};

/// Pseudo-Frobenius numbers computed as the maximal gaps of the partial
/// order induced by S. Kept deliberately separate from the construction
/// path so the two can be cross-checked.
std::vector<std::int64_t> pf_via_maximal_gaps(const NumericalSemigroup& s);

}  // namespace nsg
