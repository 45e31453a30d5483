#include "nsg/factorization.hpp"

#include <random>
#include <set>

#include "doctest.h"
#include "oracles.hpp"

using nsg::Factorization;
using nsg::NumericalSemigroup;

namespace {

std::set<std::vector<std::int64_t>> as_set(const std::vector<Factorization>& fs) {
  std::set<std::vector<std::int64_t>> out;
  for (const auto& f : fs) out.insert(f.coeffs);
  return out;
}

}  // namespace

TEST_CASE("factorization sets of the worked example") {
  NumericalSemigroup s({6, 7, 9, 10});

  const auto z18 = factorizations(s, 18);
  CHECK(as_set(z18) ==
        std::set<std::vector<std::int64_t>>{{3, 0, 0, 0}, {0, 0, 2, 0}});
  // deterministic order: descending coefficient of the largest generator first
  REQUIRE(z18.size() == 2);
  CHECK(z18[0].coeffs == std::vector<std::int64_t>{0, 0, 2, 0});
  CHECK(z18[1].coeffs == std::vector<std::int64_t>{3, 0, 0, 0});

  CHECK(as_set(factorizations(s, 14)) ==
        std::set<std::vector<std::int64_t>>{{0, 2, 0, 0}});
  CHECK(factorizations(s, 0) ==
        std::vector<Factorization>{Factorization{{0, 0, 0, 0}}});
  CHECK(factorizations(s, 8).empty());
  CHECK(factorizations(s, -4).empty());
}

TEST_CASE("factorizations over the naturals") {
  NumericalSemigroup n({1});
  CHECK(factorizations(n, 5) == std::vector<Factorization>{Factorization{{5}}});
  CHECK(count_factorizations(n, 5) == 1);
}

TEST_CASE("counting without materializing") {
  NumericalSemigroup s({6, 7, 9, 10});
  CHECK(count_factorizations(s, 18) == 2);
  CHECK(count_factorizations(s, 15) == 1);
  CHECK(count_factorizations(s, 8) == 0);
  CHECK(count_factorizations(s, -1) == 0);
}

TEST_CASE("count matches the enumerated set size up to 2F") {
  for (const auto& gens : {std::vector<std::int64_t>{6, 7, 9, 10},
                           std::vector<std::int64_t>{2, 3},
                           std::vector<std::int64_t>{14, 15, 17, 19, 20},
                           std::vector<std::int64_t>{5, 7, 11}}) {
    NumericalSemigroup s(gens);
    for (std::int64_t v = 0; v <= 2 * s.frobenius() + 2; ++v) {
      CHECK(count_factorizations(s, v) == factorizations(s, v).size());
    }
  }
}

TEST_CASE("factorizations of f + n_i avoid generator i when f is outside S") {
  NumericalSemigroup s({6, 7, 9, 10});
  for (std::int64_t f : s.gaps()) {
    for (int i = 0; i < s.embedding_dim(); ++i) {
      for (const auto& z : factorizations(s, f + s.generators()[static_cast<std::size_t>(i)])) {
        CHECK(z.coeffs[static_cast<std::size_t>(i)] == 0);
      }
    }
  }
}

TEST_CASE("monotone support") {
  NumericalSemigroup s({6, 7, 9, 10});
  for (std::int64_t v = 0; v <= 2 * s.frobenius(); ++v) {
    if (!s.contains(v)) continue;
    for (int i = 0; i < s.embedding_dim(); ++i) {
      const std::int64_t g = s.generators()[static_cast<std::size_t>(i)];
      if (g > v || !s.contains(v - g)) continue;
      bool found = false;
      for (const auto& z : factorizations(s, v))
        if (z.coeffs[static_cast<std::size_t>(i)] >= 1) found = true;
      CHECK(found);
    }
  }
}

TEST_CASE("agrees with the ascending brute-force enumerator") {
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<std::int64_t> val_dist(2, 30);
  int done = 0;
  while (done < 50) {
    std::vector<std::int64_t> gens = {val_dist(rng), val_dist(rng), val_dist(rng)};
    std::int64_t d = std::gcd(std::gcd(gens[0], gens[1]), gens[2]);
    if (d != 1) continue;
    ++done;
    NumericalSemigroup s(gens);
    for (std::int64_t v = 0; v <= 3 * s.multiplicity() + 20; ++v) {
      auto got = factorizations(s, v);
      std::vector<std::vector<std::int64_t>> got_sorted;
      for (const auto& f : got) got_sorted.push_back(f.coeffs);
      std::sort(got_sorted.begin(), got_sorted.end());
      CHECK(got_sorted == oracle::brute_factorizations(s.generators(), v));
    }
  }
}
