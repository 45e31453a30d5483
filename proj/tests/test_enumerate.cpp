#include "nsg/enumerate.hpp"

#include <mutex>
#include <set>

#include "doctest.h"
#include "nsg/io.hpp"
#include "oracles.hpp"

using nsg::NumericalSemigroup;

TEST_CASE("the first tree levels are exactly right") {
  nsg::WalkOptions walk;
  walk.threads = 1;
  std::vector<std::set<std::vector<std::int64_t>>> by_genus(4);
  const auto summary = nsg::enumerate(
      3,
      [&](const NumericalSemigroup& s) {
        by_genus[static_cast<std::size_t>(s.genus())].insert(s.generators());
      },
      walk);

  CHECK(summary.per_genus == std::vector<std::uint64_t>{1, 1, 2, 4});
  CHECK(summary.total() == 8);
  CHECK(by_genus[0] == std::set<std::vector<std::int64_t>>{{1}});
  CHECK(by_genus[1] == std::set<std::vector<std::int64_t>>{{2, 3}});
  CHECK(by_genus[2] == std::set<std::vector<std::int64_t>>{{2, 5}, {3, 4, 5}});
  CHECK(by_genus[3] ==
        std::set<std::vector<std::int64_t>>{{2, 7}, {3, 4}, {3, 5, 7}, {4, 5, 6, 7}});
}

TEST_CASE("genus zero visits only the naturals") {
  int visits = 0;
  nsg::WalkOptions walk;
  walk.threads = 1;
  const auto summary = nsg::enumerate(
      0, [&](const NumericalSemigroup& s) {
        ++visits;
        CHECK(s.frobenius() == -1);
      },
      walk);
  CHECK(visits == 1);
  CHECK(summary.per_genus == std::vector<std::uint64_t>{1});
}

TEST_CASE("per-genus counts match the gap-set oracle up to genus 12") {
  const auto expected = oracle::gap_set_counts(12);
  const auto summary = nsg::enumerate(12);
  REQUIRE(summary.per_genus.size() == expected.size());
  CHECK(summary.per_genus == expected);

  // frozen prefix
  const std::vector<std::uint64_t> known{1, 1, 2, 4, 7, 12, 23, 39, 67, 118, 204};
  for (std::size_t g = 0; g < known.size(); ++g) CHECK(summary.per_genus[g] == known[g]);
}

TEST_CASE("every visited semigroup recomputes to its tree depth") {
  nsg::WalkOptions walk;
  walk.threads = 1;
  std::vector<std::uint64_t> recount(11, 0);
  const auto summary = nsg::enumerate(
      10, [&](const NumericalSemigroup& s) { ++recount[static_cast<std::size_t>(s.genus())]; },
      walk);
  CHECK(recount == summary.per_genus);
}

TEST_CASE("enumerate is deterministic and thread-count independent") {
  nsg::WalkOptions one;
  one.threads = 1;
  nsg::WalkOptions many;
  many.threads = 4;
  many.split_depth = 4;
  CHECK(nsg::enumerate(10, {}, one).per_genus == nsg::enumerate(10, {}, many).per_genus);
}

TEST_CASE("census aggregates almost symmetric semigroups by default") {
  const auto result = nsg::census(10);
  CHECK(result.visited == nsg::enumerate(10).total());
  CHECK(result.visited_per_genus == nsg::enumerate(10).per_genus);

  // every matched record is almost symmetric with e >= 2, so N and genus 0
  // are excluded
  CHECK(result.matched_per_genus[0] == 0);
  std::uint64_t cell_total = 0;
  for (const auto& c : result.cells) {
    CHECK(c.embedding_dim >= 2);
    cell_total += c.count;
  }
  CHECK(cell_total == result.matched);

  std::uint64_t et_total = 0;
  for (const auto& [e, t, count] : result.totals_by_e_t) et_total += count;
  CHECK(et_total == result.matched);
}

TEST_CASE("census respects custom filters and collects records") {
  nsg::CensusOptions opts;
  opts.collect_records = true;
  opts.filter = [](const nsg::TreeView& v) {
    return v.almost_symmetric() && v.embedding_dim() == 4 && v.type() == 3;
  };
  const auto result = nsg::census(7, opts);

  std::set<std::vector<std::int64_t>> gens;
  for (const auto& rec : result.records) {
    gens.insert(rec.generators);
    CHECK(rec.embedding_dim == 4);
    CHECK(rec.type == 3);
    CHECK(rec.almost_symmetric);
    // records must agree with a from-scratch recomputation
    NumericalSemigroup s(rec.generators);
    CHECK(s.genus() == rec.genus);
    CHECK(s.frobenius() == rec.frobenius);
    CHECK(s.type() == rec.type);
    CHECK(s.almost_symmetric() == rec.almost_symmetric);
  }
  CHECK(gens.count({6, 7, 9, 10}) == 1);
  CHECK(gens.count({4, 5, 6, 7}) == 1);
}

TEST_CASE("low embedding dimension forces low type in the census") {
  nsg::CensusOptions opts;
  opts.filter = [](const nsg::TreeView&) { return true; };
  const auto result = nsg::census(10, opts);
  CHECK(result.matched == result.visited);
  for (const auto& c : result.cells) {
    if (c.embedding_dim == 2) CHECK(c.type == 1);
    if (c.embedding_dim == 3) CHECK(c.type <= 2);
  }
}

TEST_CASE("census output is byte-identical across thread counts") {
  nsg::CensusOptions one;
  one.walk.threads = 1;
  nsg::CensusOptions many;
  many.walk.threads = 8;
  many.walk.split_depth = 5;
  const auto a = nsg::census(11, one);
  const auto b = nsg::census(11, many);
  CHECK(nsg::census_csv(a) == nsg::census_csv(b));
  CHECK(nsg::census_summary_csv(a) == nsg::census_summary_csv(b));
  CHECK(nsg::census_svg(a) == nsg::census_svg(b));
  CHECK(a.visited == b.visited);
  CHECK(a.matched == b.matched);
}

TEST_CASE("census CSV emitters have the documented shape") {
  const auto result = nsg::census(6);
  const std::string csv = nsg::census_csv(result);
  CHECK(csv.rfind("genus,embedding_dim,type,count\n", 0) == 0);
  const std::string summary = nsg::census_summary_csv(result);
  CHECK(summary.rfind("embedding_dim,type,count\n", 0) == 0);
  const std::string svg = nsg::census_svg(result);
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(svg.find("</svg>") != std::string::npos);
}

TEST_CASE("invalid genus bounds are rejected") {
  CHECK_THROWS_AS(nsg::enumerate(-1), std::invalid_argument);
  CHECK_THROWS_AS(nsg::enumerate(nsg::detail::kGenusCap + 1), std::invalid_argument);
}
