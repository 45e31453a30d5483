#include "nsg/rf.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace nsg {
namespace {

constexpr std::uint64_t kU64Max = std::numeric_limits<std::uint64_t>::max();

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  if (a > kU64Max / b) return kU64Max;
  return a * b;
}

}  // namespace

RFMatrixCursor::RFMatrixCursor(const NumericalSemigroup& s, std::int64_t f)
    : value_(f), dim_(s.embedding_dim()) {
  if (s.contains(f))
    throw in_semigroup_error("rf_matrices: " + std::to_string(f) + " belongs to the semigroup");
  rows_.reserve(static_cast<std::size_t>(dim_));
  count_ = 1;
  for (int i = 0; i < dim_; ++i) {
    const std::int64_t target = f + s.generators()[static_cast<std::size_t>(i)];
    rows_.push_back(factorizations(s, target));
    count_ = saturating_mul(count_, rows_.back().size());
  }
  cursor_.assign(static_cast<std::size_t>(dim_), 0);
  done_ = (count_ == 0);
}

void RFMatrixCursor::reset() {
  std::fill(cursor_.begin(), cursor_.end(), 0);
  done_ = (count_ == 0);
}

bool RFMatrixCursor::next(RFMatrix& out) {
  if (done_) return false;
  out.value = value_;
  out.dim = dim_;
  out.entries.assign(static_cast<std::size_t>(dim_) * static_cast<std::size_t>(dim_), 0);
  for (int i = 0; i < dim_; ++i) {
    const auto& coeffs = rows_[static_cast<std::size_t>(i)][cursor_[static_cast<std::size_t>(i)]].coeffs;
    for (int j = 0; j < dim_; ++j)
      out.entries[static_cast<std::size_t>(i) * static_cast<std::size_t>(dim_) +
                  static_cast<std::size_t>(j)] = coeffs[static_cast<std::size_t>(j)];
    out.entries[static_cast<std::size_t>(i) * static_cast<std::size_t>(dim_) +
                static_cast<std::size_t>(i)] = -1;
  }
  // Odometer step, last row fastest.
  for (int i = dim_ - 1; i >= 0; --i) {
    if (++cursor_[static_cast<std::size_t>(i)] < rows_[static_cast<std::size_t>(i)].size()) return true;
    cursor_[static_cast<std::size_t>(i)] = 0;
  }
  done_ = true;
  return true;
}

std::vector<RFMatrix> rf_matrices(const NumericalSemigroup& s, std::int64_t f, std::size_t cap) {
  RFMatrixCursor cursor(s, f);
  if (cursor.count() > cap)
    throw std::length_error("rf_matrices: " + std::to_string(cursor.count()) +
                            " matrices exceed the materialization cap; stream with RFMatrixCursor");
  std::vector<RFMatrix> out;
  out.reserve(static_cast<std::size_t>(cursor.count()));
  RFMatrix m;
  while (cursor.next(m)) out.push_back(m);
  return out;
}

std::uint64_t rf_count(const NumericalSemigroup& s, std::int64_t f) {
  if (!s.is_pseudo_frobenius(f))
    throw not_pseudo_frobenius_error("rf_count: " + std::to_string(f) +
                                     " is not a pseudo-Frobenius number");
  std::uint64_t total = 1;
  for (std::int64_t g : s.generators())
    total = saturating_mul(total, count_factorizations(s, f + g));
  return total;
}

bool check_orthogonality(const NumericalSemigroup& s, const RFMatrix& a, const RFMatrix& b) {
  if (a.value + b.value != s.frobenius())
    throw value_mismatch_error("check_orthogonality: values sum to " +
                               std::to_string(a.value + b.value) + ", Frobenius number is " +
                               std::to_string(s.frobenius()));
  for (int i = 0; i < a.dim; ++i)
    for (int j = 0; j < a.dim; ++j)
      if (i != j && a.at(i, j) != 0 && b.at(j, i) != 0) return false;
  return true;
}

LambdaTable lambda_table(const NumericalSemigroup& s) {
  const int e = s.embedding_dim();
  LambdaTable t;
  t.dim = e;
  t.lambda.assign(static_cast<std::size_t>(e) * static_cast<std::size_t>(e), 0);
  t.m.assign(static_cast<std::size_t>(e) * static_cast<std::size_t>(e), 0);
  const auto& gens = s.generators();
  for (int i = 0; i < e; ++i) {
    for (int j = 0; j < e; ++j) {
      if (i == j) continue;
      const std::int64_t ni = gens[static_cast<std::size_t>(i)];
      const std::int64_t nj = gens[static_cast<std::size_t>(j)];
      std::int64_t best = 0;
      for (std::int64_t k = 0;; ++k) {
        const std::int64_t v = k * nj - ni;
        if (v > s.frobenius()) break;  // in S from here on
        if (!s.contains(v)) best = k;
      }
      const std::size_t idx =
          static_cast<std::size_t>(i) * static_cast<std::size_t>(e) + static_cast<std::size_t>(j);
      t.lambda[idx] = best;
      t.m[idx] = best * nj - ni;
    }
  }
  return t;
}

std::size_t GammaIndex::size_for(std::int64_t f) const noexcept {
  const auto* p = pairs_for(f);
  return p ? p->size() : 0;
}

const std::vector<std::pair<int, int>>* GammaIndex::pairs_for(std::int64_t f) const noexcept {
  for (const auto& entry : per_pf)
    if (entry.f == f) return &entry.pairs;
  return nullptr;
}

GammaIndex gamma_index(const NumericalSemigroup& s) { return gamma_index(s, lambda_table(s)); }

GammaIndex gamma_index(const NumericalSemigroup& s, const LambdaTable& table) {
  GammaIndex g;
  const auto& pf = s.pseudo_frobenius();
  for (std::int64_t f : pf) {
    if (f == s.frobenius()) continue;
    GammaIndex::Entry entry{f, {}};
    for (int i = 0; i < table.dim; ++i)
      for (int j = 0; j < table.dim; ++j)
        if (i != j && table.m_at(i, j) == f) entry.pairs.emplace_back(i, j);
    g.total += entry.pairs.size();
    g.per_pf.push_back(std::move(entry));
  }
  return g;
}

ZeroProfile rf_zero_profile(const RFMatrix& a, const RFMatrix& b) {
  if (a.dim != b.dim)
    throw std::invalid_argument("rf_zero_profile: matrices have different dimensions");
  const int e = a.dim;
  ZeroProfile p;
  p.dim = e;
  p.row_zeroes.assign(static_cast<std::size_t>(2 * e), 0);

  const RFMatrix* mats[2] = {&a, &b};
  for (int which = 0; which < 2; ++which) {
    for (int i = 0; i < e; ++i) {
      int zeroes = 0;
      int positive_col = -1;
      for (int j = 0; j < e; ++j) {
        const std::int64_t v = mats[which]->at(i, j);
        if (v == 0)
          ++zeroes;
        else if (v > 0)
          positive_col = j;
      }
      p.row_zeroes[static_cast<std::size_t>(which * e + i)] = zeroes;
      p.total_zeroes += static_cast<std::size_t>(zeroes);
      if (e >= 3 && zeroes == e - 2)
        p.gamma_rows.push_back(ZeroProfile::GammaRow{which, i, positive_col});
    }
  }

  const int levels = e - 2;
  if (levels > 0) {
    p.rows_with_at_least.assign(static_cast<std::size_t>(levels), 0);
    for (int z : p.row_zeroes)
      for (int k = 1; k <= levels; ++k)
        if (z >= k) ++p.rows_with_at_least[static_cast<std::size_t>(k - 1)];
  }
  return p;
}

std::optional<int> has_nonpositive_column(const RFMatrix& a) {
  for (int j = 0; j < a.dim; ++j) {
    bool positive = false;
    for (int i = 0; i < a.dim; ++i) {
      if (a.at(i, j) > 0) {
        positive = true;
        break;
      }
    }
    if (!positive) return j;
  }
  return std::nullopt;
}

}  // namespace nsg
