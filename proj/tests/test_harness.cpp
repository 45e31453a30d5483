#include "nsg/verify.hpp"

#include "doctest.h"
#include "nsg/io.hpp"
#include "nsg/semigroup.hpp"

TEST_CASE("golden examples pass bit-exactly") {
  const auto report = nsg::golden_examples();
  REQUIRE(report.checks.size() == 2);
  CHECK(report.passed());
  CHECK(report.exit_code() == 0);
  for (const auto& c : report.checks) CHECK(c.scanned == 1);
}

TEST_CASE("a tampered golden expectation fails with a diff") {
  nsg::GoldenExpectations tampered;
  tampered.small_pf = {3, 11};  // drop 8 as a negative control
  const auto report = nsg::golden_examples(tampered);
  CHECK_FALSE(report.passed());
  CHECK(report.exit_code() == 2);
  REQUIRE_FALSE(report.checks[0].violations.empty());
  const std::string& detail = report.checks[0].violations[0].detail;
  CHECK(detail.find("pf") != std::string::npos);
  CHECK(detail.find("3,11") != std::string::npos);
  CHECK(detail.find("3,8,11") != std::string::npos);
}

TEST_CASE("an empty check list yields an empty report") {
  const auto report = nsg::verify_lemmas(10, {});
  CHECK(report.checks.empty());
  CHECK(report.passed());
  CHECK(report.exit_code() == 0);
}

TEST_CASE("all statement checks pass on small genus") {
  const auto report = nsg::verify_lemmas(10, nsg::all_checks());
  CHECK(report.passed());
  CHECK(report.violation_total() == 0);
  CHECK(report.truncation_total() == 0);
  REQUIRE(report.checks.size() == nsg::all_checks().size());
  for (const auto& c : report.checks) {
    CHECK(c.scanned > 0);
    CHECK(c.violations.empty());
  }
}

TEST_CASE("theorem scan finds the sharp bound") {
  const auto report = nsg::verify_theorem_main(8);
  REQUIRE(report.checks.size() == 1);
  const auto& check = report.checks[0];
  CHECK(check.violations.empty());
  CHECK(check.scanned > 0);
  REQUIRE_FALSE(check.stats.empty());
  CHECK(check.stats[0].first == "max_type");
  CHECK(check.stats[0].second == "3");
}

TEST_CASE("theorem scan is vacuous below the first 4-generated semigroup") {
  const auto report = nsg::verify_theorem_main(1);
  REQUIRE(report.checks.size() == 1);
  CHECK(report.checks[0].scanned == 0);
  CHECK(report.passed());
}

TEST_CASE("the theorem bound is stronger than the type-4 bound") {
  CHECK(nsg::verify_theorem_main(10).passed());
  CHECK(nsg::verify_lemmas(10, {nsg::Check::type4}).passed());
}

TEST_CASE("check names parse and print consistently") {
  for (nsg::Check c : nsg::all_checks()) {
    const auto parsed = nsg::parse_check(nsg::check_name(c));
    REQUIRE(parsed.has_value());
    CHECK(*parsed == c);
  }
  CHECK_FALSE(nsg::parse_check("bogus").has_value());
}

TEST_CASE("exploring high embedding dimension lists the type = e = 5 example") {
  nsg::NumericalSemigroup s({14, 15, 17, 19, 20});
  const int genus = static_cast<int>(s.genus());
  const auto result = nsg::explore_high_e(genus, 5);

  bool found = false;
  for (std::size_t i = 0; i < result.records.size(); ++i) {
    const auto& rec = result.records[i];
    CHECK(rec.embedding_dim >= 5);
    CHECK(rec.almost_symmetric);
    if (rec.generators == std::vector<std::int64_t>{14, 15, 17, 19, 20}) {
      found = true;
      CHECK(rec.embedding_dim == 5);
      CHECK(rec.type == 5);
      // flagged as type >= e
      CHECK(std::count(result.type_ge_e.begin(), result.type_ge_e.end(), i) == 1);
    }
  }
  CHECK(found);
}

TEST_CASE("within small genus the type stays below e + 2") {
  const auto result = nsg::explore_high_e(10, 5);
  for (const auto& rec : result.records) CHECK(rec.type <= rec.embedding_dim + 1);
  for (const auto& st : result.stats) {
    if (st.pairs == 0) continue;
    // every sampled pair carries at least e^2 - e zeroes
    const auto e = static_cast<std::uint64_t>(st.embedding_dim);
    CHECK(st.zero_total >= st.pairs * (e * e - e));
  }
}

TEST_CASE("exploration with an unreachable floor is empty") {
  const auto result = nsg::explore_high_e(3, 6);
  CHECK(result.records.empty());
  CHECK(result.type_ge_e.empty());
}

TEST_CASE("exploration validates its arguments") {
  CHECK_THROWS_AS(nsg::explore_high_e(5, 4), std::invalid_argument);
}

TEST_CASE("verification reports are deterministic across thread counts") {
  nsg::VerifyOptions one;
  one.walk.threads = 1;
  nsg::VerifyOptions many;
  many.walk.threads = 8;
  many.walk.split_depth = 4;
  const auto a = nsg::verify_lemmas(9, nsg::all_checks(), one);
  const auto b = nsg::verify_lemmas(9, nsg::all_checks(), many);
  CHECK(nsg::report_json(a) == nsg::report_json(b));
  CHECK(nsg::report_text(a) == nsg::report_text(b));
}

TEST_CASE("exit codes distinguish violations from truncation") {
  nsg::VerificationReport r;
  r.checks.emplace_back();
  CHECK(r.exit_code() == 0);
  r.checks[0].truncation_events = 2;
  CHECK(r.exit_code() == 3);
  r.checks[0].violations.push_back(nsg::Violation{{2, 3}, "synthetic"});
  CHECK(r.exit_code() == 2);
  CHECK_FALSE(r.passed());
}

TEST_CASE("tight pair caps are reported as truncation, not failure") {
  nsg::VerifyOptions opts;
  opts.pair_cap = 1;
  opts.matrix_cap = 1;
  const auto report = nsg::verify_lemmas(8, {nsg::Check::orthogonality, nsg::Check::zeromatrix},
                                         opts);
  CHECK(report.violation_total() == 0);
  CHECK(report.truncation_total() > 0);
  CHECK(report.exit_code() == 3);
}
