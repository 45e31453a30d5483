#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nsg/enumerate.hpp"

namespace nsg {

/// The machine-checked statements. Each check folds over the enumeration
/// stream of its own population:
///   orthogonality  almost symmetric, e >= 2 (matrix pairs for f and F - f)
///   unique         all semigroups (f = a*n_j - n_i forces a = lambda(i,j))
///   zeromatrix     almost symmetric, e = 4 (nonpositive column => f = F/2)
///   zeronumber     almost symmetric, e = 4 (zero count window for pairs)
///   onetwo         almost symmetric, e = 4 (Gamma size lower bounds)
///   zeroplace      e = 4 (forced zero at (k, j))
///   triplet        almost symmetric, e = 4 (no three column-sharing values)
///   type4          almost symmetric, e = 4 (type <= 4)
///   e3bound        all semigroups (e = 3 => type <= 2, e = 2 => type = 1)
///   almostsym      all semigroups (definitional scan == arithmetic test
///                  2*genus == frobenius + type)
enum class Check {
  orthogonality,
  unique,
  zeromatrix,
  zeronumber,
  onetwo,
  zeroplace,
  triplet,
  type4,
  e3bound,
  almostsym,
};

const std::vector<Check>& all_checks();
std::string_view check_name(Check c);
std::optional<Check> parse_check(std::string_view name);

struct Violation {
  std::vector<std::int64_t> generators;
  std::string detail;
};

struct CheckReport {
  std::string name;
  std::string population;
  int max_genus = 0;
  std::uint64_t scanned = 0;            // semigroups examined
  std::uint64_t truncation_events = 0;  // capped matrix/pair enumerations
  std::vector<Violation> violations;
  double wall_seconds = 0;
  std::vector<std::pair<std::string, std::string>> stats;

  bool passed() const noexcept { return violations.empty(); }
};

struct VerificationReport {
  int max_genus = 0;
  std::vector<CheckReport> checks;
  double wall_seconds = 0;

  bool passed() const noexcept;
  std::uint64_t violation_total() const noexcept;
  std::uint64_t truncation_total() const noexcept;
  /// 0 = clean, 2 = violations found, 3 = truncation only.
  int exit_code() const noexcept;
};

struct VerifyOptions {
  WalkOptions walk{};
  std::uint64_t pair_cap = 100'000;    // matrix pairs examined per (S, f)
  std::uint64_t matrix_cap = 100'000;  // single matrices examined per (S, f)
};

/// Scans all almost symmetric semigroups with e = 4 up to max_genus and
/// reports any of type >= 4, plus the maximum type observed and a witness.
VerificationReport verify_theorem_main(int max_genus, VerifyOptions options = {});

/// Runs the selected checks fused over one traversal. An empty selection
/// yields an empty report.
VerificationReport verify_lemmas(int max_genus, const std::vector<Check>& checks,
                                 VerifyOptions options = {});

/// Frozen expectations for the two worked examples checked bit-exactly by
/// golden_examples(). Exposed so tests can run a tampered copy as a
/// negative control.
struct GoldenExpectations {
  std::vector<std::int64_t> small_gens{6, 7, 9, 10};
  std::vector<std::int64_t> small_pf{3, 8, 11};
  std::int64_t small_type = 3;
  std::int64_t small_frobenius = 11;
  bool small_almost_symmetric = true;
  std::int64_t small_rf_value = 8;
  // Row-major 4x4 matrices, unordered set semantics.
  std::vector<std::vector<std::int64_t>> small_rf_entries{
      {-1, 2, 0, 0, 1, -1, 1, 0, 0, 1, -1, 1, 3, 0, 0, -1},
      {-1, 2, 0, 0, 1, -1, 1, 0, 0, 1, -1, 1, 0, 0, 2, -1},
  };
  std::vector<std::int64_t> large_gens{14, 15, 17, 19, 20};
  std::vector<std::int64_t> large_pf{16, 18, 23, 25, 41};
  std::int64_t large_type = 5;
  bool large_almost_symmetric = true;
  std::vector<std::pair<std::int64_t, std::int64_t>> large_pf_sums{{25, 16}, {23, 18}};
};

VerificationReport golden_examples();
VerificationReport golden_examples(const GoldenExpectations& expected);

/// Zero-profile aggregates gathered while exploring high embedding
/// dimensions, keyed by e. r_sum[k] accumulates, over sampled matrix pairs,
/// the number of rows with at least k+1 zeroes.
struct ExploreRowStats {
  int embedding_dim = 0;
  std::uint64_t pairs = 0;
  std::uint64_t zero_total = 0;
  std::vector<std::uint64_t> r_sum;
  std::uint64_t min_r_top = 0;  // min/max of r_{e-2} over sampled pairs
  std::uint64_t max_r_top = 0;
};

struct ExploreResult {
  int max_genus = 0;
  int min_embedding_dim = 0;
  std::vector<CensusRecord> records;  // sorted by (genus, generators)
  std::vector<std::size_t> type_ge_e;  // indices into records with t >= e
  std::vector<ExploreRowStats> stats;  // sorted by e
  std::uint64_t truncation_events = 0;
};

/// Lists almost symmetric semigroups with e >= min_embedding_dim (>= 5) up
/// to max_genus, flags those with t >= e, and aggregates zero-profile
/// statistics over a deterministic sample of RF-matrix pairs.
ExploreResult explore_high_e(int max_genus, int min_embedding_dim, VerifyOptions options = {});

}  // namespace nsg
