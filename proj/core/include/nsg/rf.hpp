#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "nsg/factorization.hpp"
#include "nsg/semigroup.hpp"

namespace nsg {

/// A row-factorization matrix: dim x dim integers with -1 on the diagonal,
/// nonnegative entries elsewhere, and every row evaluating to `value`
/// against the generator vector.
struct RFMatrix {
  std::int64_t value = 0;
  int dim = 0;
  std::vector<std::int64_t> entries;  // row-major

  std::int64_t at(int i, int j) const {
    return entries[static_cast<std::size_t>(i) * static_cast<std::size_t>(dim) +
                   static_cast<std::size_t>(j)];
  }

  friend bool operator==(const RFMatrix& a, const RFMatrix& b) {
    return a.value == b.value && a.dim == b.dim && a.entries == b.entries;
  }
  friend bool operator<(const RFMatrix& a, const RFMatrix& b) { return a.entries < b.entries; }
};

/// Streams the RF-matrices for a value f outside S, without materializing
/// the full cartesian product of row choices. Row i of the k-th matrix is
/// the k-th combination of factorizations of f + n_i, with -1 written at
/// position i; the last row's choice advances fastest, so the order is
/// deterministic.
///
/// Throws in_semigroup_error when f belongs to S. If f + n_i is not in S
/// for some i (i.e. f is not pseudo-Frobenius) the stream is empty.
class RFMatrixCursor {
 public:
  RFMatrixCursor(const NumericalSemigroup& s, std::int64_t f);

  /// Product of the per-row factorization counts; saturates at UINT64_MAX.
  std::uint64_t count() const noexcept { return count_; }
  bool empty() const noexcept { return count_ == 0; }

  /// Writes the next matrix into `out`; false once the stream is exhausted.
  bool next(RFMatrix& out);
  void reset();

 private:
  std::int64_t value_;
  int dim_;
  std::uint64_t count_ = 0;
  std::vector<std::vector<Factorization>> rows_;
  std::vector<std::size_t> cursor_;
  bool done_ = false;
};

/// Materializes all RF-matrices for f. The full set is only built when its
/// size is at most `cap` (default 10^6); beyond that a std::length_error is
/// thrown and callers should stream via RFMatrixCursor instead.
std::vector<RFMatrix> rf_matrices(const NumericalSemigroup& s, std::int64_t f,
                                  std::size_t cap = 1'000'000);

/// Number of RF-matrices for a pseudo-Frobenius number f: the product of
/// |Z(f + n_i)| over all generators, computed by the counting DP.
/// Throws not_pseudo_frobenius_error if f is not in PF(S).
std::uint64_t rf_count(const NumericalSemigroup& s, std::int64_t f);

/// True iff a.at(i,j) * b.at(j,i) == 0 for every i != j. Requires
/// a.value + b.value == frobenius(s); throws value_mismatch_error otherwise.
bool check_orthogonality(const NumericalSemigroup& s, const RFMatrix& a, const RFMatrix& b);

/// lambda(i,j) is the largest K >= 0 with K*n_j - n_i outside S, and
/// m(i,j) = lambda(i,j)*n_j - n_i. Indices are 0-based; the diagonal is
/// unused. The domain has exactly dim^2 - dim entries.
struct LambdaTable {
  int dim = 0;
  std::vector<std::int64_t> lambda;  // row-major
  std::vector<std::int64_t> m;

  std::int64_t lambda_at(int i, int j) const {
    return lambda[static_cast<std::size_t>(i) * static_cast<std::size_t>(dim) +
                  static_cast<std::size_t>(j)];
  }
  std::int64_t m_at(int i, int j) const {
    return m[static_cast<std::size_t>(i) * static_cast<std::size_t>(dim) +
             static_cast<std::size_t>(j)];
  }
  std::size_t size() const noexcept {
    return static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim == 0 ? 0 : dim - 1);
  }
};

LambdaTable lambda_table(const NumericalSemigroup& s);

/// For each pseudo-Frobenius number f other than the Frobenius number, the
/// multiset of index pairs (i, j) with m(i,j) == f. Pairs are 0-based and
/// listed in (i, j) order; entries are keyed by ascending f.
struct GammaIndex {
  struct Entry {
    std::int64_t f;
    std::vector<std::pair<int, int>> pairs;
  };
  std::vector<Entry> per_pf;
  std::size_t total = 0;

  std::size_t size_for(std::int64_t f) const noexcept;
  const std::vector<std::pair<int, int>>* pairs_for(std::int64_t f) const noexcept;
};

GammaIndex gamma_index(const NumericalSemigroup& s);
GammaIndex gamma_index(const NumericalSemigroup& s, const LambdaTable& table);

/// Zero statistics for a pair of RF-matrices over the same semigroup.
/// Rows are indexed 0..2*dim-1 (first matrix then second). rows_with_at_least[k]
/// counts rows having at least k+1 zeroes, for k+1 up to dim-2. Rows with
/// exactly dim-2 zeroes carry a single positive off-diagonal entry; each one
/// names an element of the Gamma multiset at (row, col).
struct ZeroProfile {
  int dim = 0;
  std::size_t total_zeroes = 0;
  std::vector<int> row_zeroes;
  std::vector<std::size_t> rows_with_at_least;

  struct GammaRow {
    int matrix;  // 0 = first argument, 1 = second
    int row;
    int col;  // column of the positive entry
  };
  std::vector<GammaRow> gamma_rows;
};

ZeroProfile rf_zero_profile(const RFMatrix& a, const RFMatrix& b);

/// Least column index containing no positive entry, if any (0-based).
std::optional<int> has_nonpositive_column(const RFMatrix& a);

}  // namespace nsg
