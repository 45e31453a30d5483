#pragma once

#include <cstdint>
#include <functional>
#include <tuple>
#include <vector>

#include "nsg/tree_walk.hpp"

namespace nsg {

struct TraversalSummary {
  int max_genus = 0;
  std::vector<std::uint64_t> per_genus;  // index = genus

  std::uint64_t total() const noexcept {
    std::uint64_t t = 0;
    for (std::uint64_t c : per_genus) t += c;
    return t;
  }
};

/// Visits every numerical semigroup of genus <= max_genus exactly once
/// (including N at genus 0) and returns per-genus counts. The visitor may
/// be empty; when set it runs on worker threads and must be pure or
/// internally synchronized.
TraversalSummary enumerate(int max_genus,
                           const std::function<void(const NumericalSemigroup&)>& visitor = {},
                           WalkOptions options = {});

struct CensusRecord {
  int genus = 0;
  int embedding_dim = 0;
  std::int64_t type = 0;
  std::int64_t frobenius = 0;
  bool almost_symmetric = false;
  std::vector<std::int64_t> generators;
};

struct CensusCell {
  int genus = 0;
  int embedding_dim = 0;
  std::int64_t type = 0;
  std::uint64_t count = 0;
};

struct CensusResult {
  int max_genus = 0;
  std::uint64_t visited = 0;  // all semigroups in the tree, N included
  std::uint64_t matched = 0;  // semigroups passing the filter
  std::vector<std::uint64_t> visited_per_genus;
  std::vector<std::uint64_t> matched_per_genus;
  std::vector<CensusCell> cells;  // matched counts keyed by (genus, e, t), sorted
  std::vector<std::tuple<int, std::int64_t, std::uint64_t>> totals_by_e_t;  // sorted (e, t)
  std::vector<CensusRecord> records;  // only populated when collect_records
};

struct CensusOptions {
  WalkOptions walk{};
  /// Predicate selecting the records to aggregate. Defaults to
  /// almost-symmetric semigroups with embedding dimension >= 2 (which
  /// excludes N and genus 0).
  std::function<bool(const TreeView&)> filter{};
  bool collect_records = false;
};

/// Walks the tree once and aggregates matched records as (genus, e, t) and
/// (e, t) counts. Output is identical for any thread count.
CensusResult census(int max_genus, CensusOptions options = {});

}  // namespace nsg
