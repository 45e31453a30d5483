#include "nsg/enumerate.hpp"

#include <algorithm>
#include <map>

namespace nsg {
namespace {

CensusRecord record_from(const TreeView& v) {
  CensusRecord r;
  r.genus = v.genus();
  r.embedding_dim = v.embedding_dim();
  r.type = v.type();
  r.frobenius = v.frobenius();
  r.almost_symmetric = v.almost_symmetric();
  r.generators.assign(v.generators().begin(), v.generators().end());
  return r;
}

struct CensusAcc {
  std::vector<std::uint64_t> visited_pg;
  std::vector<std::uint64_t> matched_pg;
  std::map<std::tuple<int, int, std::int64_t>, std::uint64_t> cells;
  std::vector<CensusRecord> records;
};

}  // namespace

TraversalSummary enumerate(int max_genus,
                           const std::function<void(const NumericalSemigroup&)>& visitor,
                           WalkOptions options) {
  using Acc = std::vector<std::uint64_t>;
  Acc counts = detail::parallel_tree_fold<Acc>(
      max_genus, options, [&] { return Acc(static_cast<std::size_t>(max_genus) + 1, 0); },
      [&](Acc& a, const TreeView& v) {
        ++a[static_cast<std::size_t>(v.genus())];
        if (visitor) visitor(v.materialize());
      },
      [](Acc& a, Acc&& b) {
        for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
      });
  TraversalSummary s;
  s.max_genus = max_genus;
  s.per_genus = std::move(counts);
  return s;
}

CensusResult census(int max_genus, CensusOptions options) {
  const auto filter = options.filter
                          ? options.filter
                          : [](const TreeView& v) {
                              return v.embedding_dim() >= 2 && v.almost_symmetric();
                            };
  const bool collect = options.collect_records;

  CensusAcc acc = detail::parallel_tree_fold<CensusAcc>(
      max_genus, options.walk,
      [&] {
        CensusAcc a;
        a.visited_pg.assign(static_cast<std::size_t>(max_genus) + 1, 0);
        a.matched_pg.assign(static_cast<std::size_t>(max_genus) + 1, 0);
        return a;
      },
      [&](CensusAcc& a, const TreeView& v) {
        ++a.visited_pg[static_cast<std::size_t>(v.genus())];
        if (!filter(v)) return;
        ++a.matched_pg[static_cast<std::size_t>(v.genus())];
        ++a.cells[{v.genus(), v.embedding_dim(), v.type()}];
        if (collect) a.records.push_back(record_from(v));
      },
      [](CensusAcc& a, CensusAcc&& b) {
        for (std::size_t i = 0; i < a.visited_pg.size(); ++i) {
          a.visited_pg[i] += b.visited_pg[i];
          a.matched_pg[i] += b.matched_pg[i];
        }
        for (const auto& [key, count] : b.cells) a.cells[key] += count;
        a.records.insert(a.records.end(), std::make_move_iterator(b.records.begin()),
                         std::make_move_iterator(b.records.end()));
      });

  CensusResult res;
  res.max_genus = max_genus;
  res.visited_per_genus = std::move(acc.visited_pg);
  res.matched_per_genus = std::move(acc.matched_pg);
  for (std::uint64_t c : res.visited_per_genus) res.visited += c;
  for (std::uint64_t c : res.matched_per_genus) res.matched += c;

  std::map<std::pair<int, std::int64_t>, std::uint64_t> by_e_t;
  for (const auto& [key, count] : acc.cells) {
    const auto& [g, e, t] = key;
    res.cells.push_back(CensusCell{g, e, t, count});
    by_e_t[{e, t}] += count;
  }
  for (const auto& [key, count] : by_e_t)
    res.totals_by_e_t.emplace_back(key.first, key.second, count);

  res.records = std::move(acc.records);
  return res;
}

}  // namespace nsg
