#include "nsg/verify.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <sstream>

#include "nsg/rf.hpp"

namespace nsg {
namespace {

constexpr std::uint64_t kExplorePairCap = 1000;

std::string join64(std::span<const std::int64_t> xs) {
  std::ostringstream os;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) os << ',';
    os << xs[i];
  }
  return os.str();
}

std::string join64(const std::vector<std::int64_t>& xs) {
  return join64(std::span<const std::int64_t>(xs.data(), xs.size()));
}

struct CheckAcc {
  std::uint64_t scanned = 0;
  std::uint64_t truncations = 0;
  std::vector<Violation> violations;

  void violation(std::span<const std::int64_t> gens, std::string detail) {
    violations.push_back(Violation{{gens.begin(), gens.end()}, std::move(detail)});
  }
  void merge(CheckAcc&& o) {
    scanned += o.scanned;
    truncations += o.truncations;
    violations.insert(violations.end(), std::make_move_iterator(o.violations.begin()),
                      std::make_move_iterator(o.violations.end()));
  }
};

void sort_violations(std::vector<Violation>& vs) {
  std::sort(vs.begin(), vs.end(), [](const Violation& a, const Violation& b) {
    if (a.generators != b.generators) return a.generators < b.generators;
    return a.detail < b.detail;
  });
}

struct CheckMeta {
  Check check;
  std::string_view name;
  std::string_view population;
};

constexpr CheckMeta kCheckMeta[] = {
    {Check::orthogonality, "orthogonality", "almost symmetric, e >= 2"},
    {Check::unique, "unique", "all semigroups"},
    {Check::zeromatrix, "zeromatrix", "almost symmetric, e = 4"},
    {Check::zeronumber, "zeronumber", "almost symmetric, e = 4"},
    {Check::onetwo, "onetwo", "almost symmetric, e = 4"},
    {Check::zeroplace, "zeroplace", "e = 4"},
    {Check::triplet, "triplet", "almost symmetric, e = 4"},
    {Check::type4, "type4", "almost symmetric, e = 4"},
    {Check::e3bound, "e3bound", "all semigroups"},
    {Check::almostsym, "almostsym", "all semigroups"},
};

const CheckMeta& meta_of(Check c) {
  for (const auto& m : kCheckMeta)
    if (m.check == c) return m;
  throw std::logic_error("unknown check");
}

int zero_count(const RFMatrix& m) {
  int z = 0;
  for (std::int64_t v : m.entries)
    if (v == 0) ++z;
  return z;
}

// Shared per-node scratch: the semigroup and its tables are materialized at
// most once, whichever checks need them.
class NodeContext {
 public:
  explicit NodeContext(const TreeView& view) : view_(view) {}

  const NumericalSemigroup& sg() {
    if (!sg_) sg_.emplace(view_.materialize());
    return *sg_;
  }
  const LambdaTable& lambda() {
    if (!lam_) lam_.emplace(lambda_table(sg()));
    return *lam_;
  }
  const GammaIndex& gamma() {
    if (!gam_) gam_.emplace(gamma_index(sg(), lambda()));
    return *gam_;
  }

 private:
  const TreeView& view_;
  std::optional<NumericalSemigroup> sg_;
  std::optional<LambdaTable> lam_;
  std::optional<GammaIndex> gam_;
};

struct LemmaAcc {
  std::vector<CheckAcc> per;
};

struct LemmaRunner {
  std::vector<Check> checks;
  VerifyOptions options;
  bool selected[10] = {};

  CheckAcc* slot(LemmaAcc& acc, Check c) const {
    for (std::size_t i = 0; i < checks.size(); ++i)
      if (checks[i] == c) return &acc.per[i];
    return nullptr;
  }
  bool want(Check c) const { return selected[static_cast<int>(c)]; }

  void visit(LemmaAcc& acc, const TreeView& v) const {
    const int e = v.embedding_dim();
    const auto gens = v.generators();
    NodeContext ctx(v);

    if (want(Check::almostsym)) {
      CheckAcc& a = *slot(acc, Check::almostsym);
      ++a.scanned;
      const bool definitional = v.almost_symmetric();
      const bool arithmetic = 2 * static_cast<std::int64_t>(v.genus()) == v.frobenius() + v.type();
      if (definitional != arithmetic) {
        std::ostringstream os;
        os << "definitional=" << (definitional ? "true" : "false")
           << " arithmetic=" << (arithmetic ? "true" : "false") << " (2g=" << 2 * v.genus()
           << ", F+t=" << v.frobenius() + v.type() << ")";
        a.violation(gens, os.str());
      }
    }

    if (want(Check::e3bound)) {
      CheckAcc& a = *slot(acc, Check::e3bound);
      ++a.scanned;
      if (e == 3 && v.type() > 2) {
        a.violation(gens, "e=3 with type " + std::to_string(v.type()));
      } else if (e == 2 && v.type() != 1) {
        a.violation(gens, "e=2 with type " + std::to_string(v.type()));
      }
    }

    if (want(Check::unique)) {
      CheckAcc& a = *slot(acc, Check::unique);
      ++a.scanned;
      if (e >= 2) run_unique(ctx, gens, a);
    }

    const bool almost = v.almost_symmetric();

    if (want(Check::type4) && e == 4 && almost) {
      CheckAcc& a = *slot(acc, Check::type4);
      ++a.scanned;
      if (v.type() > 4) a.violation(gens, "type " + std::to_string(v.type()) + " > 4");
    }

    if (want(Check::triplet) && e == 4 && almost) {
      CheckAcc& a = *slot(acc, Check::triplet);
      ++a.scanned;
      run_triplet(ctx, gens, a);
    }

    if (want(Check::onetwo) && e == 4 && almost) {
      CheckAcc& a = *slot(acc, Check::onetwo);
      ++a.scanned;
      run_onetwo(ctx, gens, a);
    }

    if (want(Check::zeromatrix) && e == 4 && almost) {
      CheckAcc& a = *slot(acc, Check::zeromatrix);
      ++a.scanned;
      run_zeromatrix(ctx, gens, a);
    }

    if (want(Check::zeroplace) && e == 4) {
      CheckAcc& a = *slot(acc, Check::zeroplace);
      ++a.scanned;
      run_zeroplace(ctx, gens, a);
    }

    {
      CheckAcc* orth = (want(Check::orthogonality) && almost && e >= 2)
                           ? slot(acc, Check::orthogonality)
                           : nullptr;
      CheckAcc* zn =
          (want(Check::zeronumber) && almost && e == 4) ? slot(acc, Check::zeronumber) : nullptr;
      if (orth) ++orth->scanned;
      if (zn) ++zn->scanned;
      if (orth || zn) run_pairs(ctx, gens, orth, zn);
    }
  }

  void run_unique(NodeContext& ctx, std::span<const std::int64_t> gens, CheckAcc& a) const {
    const auto& s = ctx.sg();
    const auto& lam = ctx.lambda();
    const int e = s.embedding_dim();
    for (std::int64_t f : s.pseudo_frobenius()) {
      for (int i = 0; i < e; ++i) {
        for (int j = 0; j < e; ++j) {
          if (i == j) continue;
          const std::int64_t ni = s.generators()[static_cast<std::size_t>(i)];
          const std::int64_t nj = s.generators()[static_cast<std::size_t>(j)];
          if ((f + ni) % nj != 0) continue;
          const std::int64_t coeff = (f + ni) / nj;
          if (coeff < 0) continue;
          if (coeff != lam.lambda_at(i, j)) {
            std::ostringstream os;
            os << "f=" << f << " = " << coeff << "*n" << j + 1 << " - n" << i + 1
               << " but lambda(" << i + 1 << "," << j + 1 << ")=" << lam.lambda_at(i, j);
            a.violation(gens, os.str());
          }
        }
      }
    }
  }

  void run_triplet(NodeContext& ctx, std::span<const std::int64_t> gens, CheckAcc& a) const {
    const auto& s = ctx.sg();
    const auto& lam = ctx.lambda();
    const std::int64_t f_big = s.frobenius();
    for (int i = 0; i < 4; ++i) {
      std::vector<std::int64_t> vals;
      for (int j = 0; j < 4; ++j) {
        if (j == i) continue;
        const std::int64_t m = lam.m_at(j, i);
        if (m != f_big && s.is_pseudo_frobenius(m)) vals.push_back(m);
      }
      std::sort(vals.begin(), vals.end());
      vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
      if (vals.size() >= 3) {
        std::ostringstream os;
        os << "column " << i + 1 << " realizes three distinct values " << join64(vals)
           << " of PF minus Frobenius";
        a.violation(gens, os.str());
      }
    }
  }

  void run_onetwo(NodeContext& ctx, std::span<const std::int64_t> gens, CheckAcc& a) const {
    const auto& s = ctx.sg();
    const auto& gamma = ctx.gamma();
    const std::int64_t f_big = s.frobenius();
    for (std::int64_t f : s.pseudo_frobenius()) {
      if (f == f_big) continue;
      if (2 * f == f_big) {
        if (gamma.size_for(f) < 2) {
          std::ostringstream os;
          os << "f=" << f << "=F/2: |Gamma_f| = " << gamma.size_for(f) << " < 2";
          a.violation(gens, os.str());
        }
      } else {
        const std::size_t sum = gamma.size_for(f) + gamma.size_for(f_big - f);
        if (sum < 4) {
          std::ostringstream os;
          os << "f=" << f << ": |Gamma_f| + |Gamma_{F-f}| = " << sum << " < 4";
          a.violation(gens, os.str());
        }
      }
    }
    const std::size_t lower = 2 * (s.pseudo_frobenius().size() - 1);
    if (gamma.total < lower) {
      std::ostringstream os;
      os << "|Gamma| = " << gamma.total << " < 2(t-1) = " << lower;
      a.violation(gens, os.str());
    }
  }

  void run_zeromatrix(NodeContext& ctx, std::span<const std::int64_t> gens, CheckAcc& a) const {
    const auto& s = ctx.sg();
    const std::int64_t f_big = s.frobenius();
    for (std::int64_t f : s.pseudo_frobenius()) {
      if (f == f_big) continue;
      RFMatrixCursor cursor(s, f);
      if (cursor.count() > options.matrix_cap) ++a.truncations;
      RFMatrix m;
      std::uint64_t seen = 0;
      while (seen < options.matrix_cap && cursor.next(m)) {
        ++seen;
        const auto col = has_nonpositive_column(m);
        if (col && 2 * f != f_big) {
          std::ostringstream os;
          os << "f=" << f << ": matrix " << seen - 1 << " has nonpositive column " << *col + 1
             << " but 2f != F (F=" << f_big << ")";
          a.violation(gens, os.str());
        }
      }
    }
  }

  void run_zeroplace(NodeContext& ctx, std::span<const std::int64_t> gens, CheckAcc& a) const {
    const auto& s = ctx.sg();
    const auto& lam = ctx.lambda();
    const std::int64_t f_big = s.frobenius();
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) {
        if (j == i) continue;
        for (int k = 0; k < 4; ++k) {
          if (k == i || k == j) continue;
          const std::int64_t f = lam.m_at(j, i);
          const std::int64_t f2 = lam.m_at(k, i);
          if (f == f_big || f2 == f_big) continue;
          if (!s.is_pseudo_frobenius(f) || !s.is_pseudo_frobenius(f2)) continue;
          if (lam.lambda_at(j, i) < lam.lambda_at(k, i)) continue;
          RFMatrixCursor cursor(s, f_big - f);
          if (cursor.count() > options.matrix_cap) ++a.truncations;
          RFMatrix m;
          std::uint64_t seen = 0;
          while (seen < options.matrix_cap && cursor.next(m)) {
            ++seen;
            if (m.at(k, j) != 0) {
              std::ostringstream os;
              os << "f=M(" << j + 1 << "," << i + 1 << ")=" << f << ", f'=M(" << k + 1 << ","
                 << i + 1 << ")=" << f2 << ": matrix " << seen - 1 << " for F-f has entry ("
                 << k + 1 << "," << j + 1 << ")=" << m.at(k, j) << " != 0";
              a.violation(gens, os.str());
            }
          }
        }
      }
    }
  }

  void run_pairs(NodeContext& ctx, std::span<const std::int64_t> gens, CheckAcc* orth,
                 CheckAcc* zn) const {
    const auto& s = ctx.sg();
    const std::int64_t f_big = s.frobenius();
    for (std::int64_t f : s.pseudo_frobenius()) {
      if (f == f_big) continue;
      RFMatrixCursor ca(s, f);
      RFMatrixCursor cb(s, f_big - f);
      std::uint64_t total = ca.count();
      total = (cb.count() != 0 && total > options.pair_cap / cb.count()) ? options.pair_cap + 1
                                                                         : total * cb.count();
      const bool truncated = total > options.pair_cap;
      if (truncated) {
        if (orth) ++orth->truncations;
        if (zn) ++zn->truncations;
      }

      // Materialize the (capped) B side once; stream the A side.
      std::vector<RFMatrix> bs;
      std::vector<int> b_zeroes;
      {
        RFMatrix m;
        while (bs.size() < options.pair_cap && cb.next(m)) {
          b_zeroes.push_back(zero_count(m));
          bs.push_back(std::move(m));
        }
      }

      std::size_t gsum = 0;
      if (zn) {
        const auto& gamma = ctx.gamma();
        gsum = gamma.size_for(f) + gamma.size_for(f_big - f) + 8;
      }

      std::uint64_t pairs = 0;
      RFMatrix a_mat;
      bool stop = false;
      while (!stop && ca.next(a_mat)) {
        const int a_zero = zn ? zero_count(a_mat) : 0;
        for (std::size_t bi = 0; bi < bs.size(); ++bi) {
          const RFMatrix& b_mat = bs[bi];
          if (orth) {
            for (int i = 0; i < a_mat.dim; ++i) {
              for (int j = 0; j < a_mat.dim; ++j) {
                if (i != j && a_mat.at(i, j) != 0 && b_mat.at(j, i) != 0) {
                  std::ostringstream os;
                  os << "f=" << f << " pair " << pairs << ": a(" << i + 1 << "," << j + 1
                     << ")=" << a_mat.at(i, j) << " and b(" << j + 1 << "," << i + 1
                     << ")=" << b_mat.at(j, i) << " both positive";
                  orth->violation(gens, os.str());
                }
              }
            }
          }
          if (zn) {
            const std::size_t zeroes =
                static_cast<std::size_t>(a_zero) + static_cast<std::size_t>(b_zeroes[bi]);
            if (zeroes < 12 || zeroes > gsum) {
              std::ostringstream os;
              os << "f=" << f << " pair " << pairs << ": " << zeroes << " zeroes outside [12, "
                 << gsum << "]";
              zn->violation(gens, os.str());
            }
          }
          if (++pairs >= options.pair_cap) {
            stop = true;
            break;
          }
        }
      }
    }
  }
};

CheckReport finalize_check(Check c, int max_genus, CheckAcc&& acc, double wall) {
  const CheckMeta& m = meta_of(c);
  CheckReport r;
  r.name = std::string(m.name);
  r.population = std::string(m.population);
  r.max_genus = max_genus;
  r.scanned = acc.scanned;
  r.truncation_events = acc.truncations;
  r.violations = std::move(acc.violations);
  sort_violations(r.violations);
  r.wall_seconds = wall;
  return r;
}

void golden_diff(CheckReport& report, const std::vector<std::int64_t>& gens,
                 const std::string& what, const std::string& expected, const std::string& got) {
  if (expected == got) return;
  report.violations.push_back(
      Violation{gens, what + ": expected [" + expected + "] got [" + got + "]"});
}

}  // namespace

const std::vector<Check>& all_checks() {
  static const std::vector<Check> all = {
      Check::orthogonality, Check::unique,  Check::zeromatrix, Check::zeronumber, Check::onetwo,
      Check::zeroplace,     Check::triplet, Check::type4,      Check::e3bound,    Check::almostsym,
  };
  return all;
}

std::string_view check_name(Check c) { return meta_of(c).name; }

std::optional<Check> parse_check(std::string_view name) {
  for (const auto& m : kCheckMeta)
    if (m.name == name) return m.check;
  return std::nullopt;
}

bool VerificationReport::passed() const noexcept {
  for (const auto& c : checks)
    if (!c.passed()) return false;
  return true;
}

std::uint64_t VerificationReport::violation_total() const noexcept {
  std::uint64_t n = 0;
  for (const auto& c : checks) n += c.violations.size();
  return n;
}

std::uint64_t VerificationReport::truncation_total() const noexcept {
  std::uint64_t n = 0;
  for (const auto& c : checks) n += c.truncation_events;
  return n;
}

int VerificationReport::exit_code() const noexcept {
  if (violation_total() > 0) return 2;
  if (truncation_total() > 0) return 3;
  return 0;
}

VerificationReport verify_theorem_main(int max_genus, VerifyOptions options) {
  struct Acc {
    CheckAcc check;
    std::int64_t max_type = 0;
    std::vector<std::int64_t> witness;
  };
  const auto start = std::chrono::steady_clock::now();
  Acc acc = detail::parallel_tree_fold<Acc>(
      max_genus, options.walk, [] { return Acc{}; },
      [](Acc& a, const TreeView& v) {
        if (v.embedding_dim() != 4 || !v.almost_symmetric()) return;
        ++a.check.scanned;
        const std::int64_t t = v.type();
        if (t >= 4)
          a.check.violation(v.generators(), "type " + std::to_string(t) + " > 3");
        std::vector<std::int64_t> gens(v.generators().begin(), v.generators().end());
        if (t > a.max_type || (t == a.max_type && !a.witness.empty() && gens < a.witness)) {
          a.max_type = t;
          a.witness = std::move(gens);
        }
      },
      [](Acc& a, Acc&& b) {
        a.check.merge(std::move(b.check));
        if (b.max_type > a.max_type ||
            (b.max_type == a.max_type && !b.witness.empty() &&
             (a.witness.empty() || b.witness < a.witness))) {
          a.max_type = b.max_type;
          a.witness = std::move(b.witness);
        }
      });
  const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  VerificationReport report;
  report.max_genus = max_genus;
  report.wall_seconds = wall;
  CheckReport check;
  check.name = "theorem";
  check.population = "almost symmetric, e = 4";
  check.max_genus = max_genus;
  check.scanned = acc.check.scanned;
  check.violations = std::move(acc.check.violations);
  sort_violations(check.violations);
  check.wall_seconds = wall;
  check.stats.emplace_back("max_type", std::to_string(acc.max_type));
  if (!acc.witness.empty()) check.stats.emplace_back("max_type_witness", join64(acc.witness));
  report.checks.push_back(std::move(check));
  return report;
}

VerificationReport verify_lemmas(int max_genus, const std::vector<Check>& checks,
                                 VerifyOptions options) {
  VerificationReport report;
  report.max_genus = max_genus;
  if (checks.empty()) return report;

  LemmaRunner runner;
  runner.checks = checks;
  runner.options = options;
  for (Check c : checks) runner.selected[static_cast<int>(c)] = true;

  const auto start = std::chrono::steady_clock::now();
  LemmaAcc acc = detail::parallel_tree_fold<LemmaAcc>(
      max_genus, options.walk,
      [&] {
        LemmaAcc a;
        a.per.resize(checks.size());
        return a;
      },
      [&](LemmaAcc& a, const TreeView& v) { runner.visit(a, v); },
      [](LemmaAcc& a, LemmaAcc&& b) {
        for (std::size_t i = 0; i < a.per.size(); ++i) a.per[i].merge(std::move(b.per[i]));
      });
  const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  report.wall_seconds = wall;
  for (std::size_t i = 0; i < checks.size(); ++i)
    report.checks.push_back(finalize_check(checks[i], max_genus, std::move(acc.per[i]), wall));
  return report;
}

VerificationReport golden_examples() { return golden_examples(GoldenExpectations{}); }

VerificationReport golden_examples(const GoldenExpectations& expected) {
  const auto start = std::chrono::steady_clock::now();
  VerificationReport report;
  report.max_genus = 0;

  {
    CheckReport check;
    check.name = "golden_" + join64(expected.small_gens);
    check.population = "fixed example";
    check.scanned = 1;
    try {
      NumericalSemigroup s(expected.small_gens);
      golden_diff(check, expected.small_gens, "pf", join64(expected.small_pf),
                  join64(s.pseudo_frobenius()));
      golden_diff(check, expected.small_gens, "type", std::to_string(expected.small_type),
                  std::to_string(s.type()));
      golden_diff(check, expected.small_gens, "frobenius",
                  std::to_string(expected.small_frobenius), std::to_string(s.frobenius()));
      golden_diff(check, expected.small_gens, "almost_symmetric",
                  expected.small_almost_symmetric ? "true" : "false",
                  s.almost_symmetric() ? "true" : "false");

      auto matrices = rf_matrices(s, expected.small_rf_value);
      std::vector<std::vector<std::int64_t>> got;
      got.reserve(matrices.size());
      for (const auto& m : matrices) got.push_back(m.entries);
      std::sort(got.begin(), got.end());
      auto want = expected.small_rf_entries;
      std::sort(want.begin(), want.end());
      if (got != want) {
        std::ostringstream expect_os, got_os;
        for (const auto& m : want) expect_os << "{" << join64(m) << "} ";
        for (const auto& m : got) got_os << "{" << join64(m) << "} ";
        golden_diff(check, expected.small_gens,
                    "rf_matrices(" + std::to_string(expected.small_rf_value) + ")",
                    expect_os.str(), got_os.str());
      }
    } catch (const std::exception& ex) {
      check.violations.push_back(Violation{expected.small_gens, std::string("exception: ") + ex.what()});
    }
    report.checks.push_back(std::move(check));
  }

  {
    CheckReport check;
    check.name = "golden_" + join64(expected.large_gens);
    check.population = "fixed example";
    check.scanned = 1;
    try {
      NumericalSemigroup s(expected.large_gens);
      golden_diff(check, expected.large_gens, "pf", join64(expected.large_pf),
                  join64(s.pseudo_frobenius()));
      golden_diff(check, expected.large_gens, "type", std::to_string(expected.large_type),
                  std::to_string(s.type()));
      golden_diff(check, expected.large_gens, "embedding_dim",
                  std::to_string(expected.large_gens.size()),
                  std::to_string(s.embedding_dim()));
      golden_diff(check, expected.large_gens, "almost_symmetric",
                  expected.large_almost_symmetric ? "true" : "false",
                  s.almost_symmetric() ? "true" : "false");
      for (const auto& [a, b] : expected.large_pf_sums) {
        const bool ok = a + b == s.frobenius() && s.is_pseudo_frobenius(a) &&
                        s.is_pseudo_frobenius(b);
        if (!ok) {
          std::ostringstream os;
          os << "pf sum " << a << "+" << b << " must equal frobenius " << s.frobenius()
             << " with both terms pseudo-Frobenius";
          check.violations.push_back(Violation{expected.large_gens, os.str()});
        }
      }
    } catch (const std::exception& ex) {
      check.violations.push_back(Violation{expected.large_gens, std::string("exception: ") + ex.what()});
    }
    report.checks.push_back(std::move(check));
  }

  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  for (auto& c : report.checks) c.wall_seconds = report.wall_seconds;
  return report;
}

ExploreResult explore_high_e(int max_genus, int min_embedding_dim, VerifyOptions options) {
  if (min_embedding_dim < 5)
    throw std::invalid_argument("explore_high_e: min embedding dimension must be >= 5");

  struct Acc {
    std::vector<CensusRecord> records;
    std::map<int, ExploreRowStats> stats;
    std::uint64_t truncations = 0;
  };

  const std::uint64_t pair_cap = std::min<std::uint64_t>(options.pair_cap, kExplorePairCap);

  Acc acc = detail::parallel_tree_fold<Acc>(
      max_genus, options.walk, [] { return Acc{}; },
      [&](Acc& a, const TreeView& v) {
        const int e = v.embedding_dim();
        if (e < min_embedding_dim || !v.almost_symmetric()) return;

        CensusRecord rec;
        rec.genus = v.genus();
        rec.embedding_dim = e;
        rec.type = v.type();
        rec.frobenius = v.frobenius();
        rec.almost_symmetric = true;
        rec.generators.assign(v.generators().begin(), v.generators().end());
        a.records.push_back(std::move(rec));

        NumericalSemigroup s = v.materialize();
        auto& st = a.stats[e];
        if (st.pairs == 0 && st.r_sum.empty()) {
          st.embedding_dim = e;
          st.r_sum.assign(static_cast<std::size_t>(e > 2 ? e - 2 : 0), 0);
          st.min_r_top = ~std::uint64_t{0};
        }
        const std::int64_t f_big = s.frobenius();
        for (std::int64_t f : s.pseudo_frobenius()) {
          if (f == f_big) continue;
          RFMatrixCursor ca(s, f);
          RFMatrixCursor cb(s, f_big - f);
          std::vector<RFMatrix> bs;
          {
            RFMatrix m;
            while (bs.size() < pair_cap && cb.next(m)) bs.push_back(std::move(m));
          }
          std::uint64_t total = ca.count();
          total = (cb.count() != 0 && total > pair_cap / cb.count()) ? pair_cap + 1
                                                                     : total * cb.count();
          if (total > pair_cap) ++a.truncations;

          std::uint64_t pairs = 0;
          RFMatrix a_mat;
          bool stop = false;
          while (!stop && ca.next(a_mat)) {
            for (const RFMatrix& b_mat : bs) {
              const ZeroProfile p = rf_zero_profile(a_mat, b_mat);
              ++st.pairs;
              st.zero_total += p.total_zeroes;
              for (std::size_t k = 0; k < p.rows_with_at_least.size() && k < st.r_sum.size(); ++k)
                st.r_sum[k] += p.rows_with_at_least[k];
              if (!p.rows_with_at_least.empty()) {
                const std::uint64_t top = p.rows_with_at_least.back();
                st.min_r_top = std::min(st.min_r_top, top);
                st.max_r_top = std::max(st.max_r_top, top);
              }
              if (++pairs >= pair_cap) {
                stop = true;
                break;
              }
            }
          }
        }
      },
      [](Acc& a, Acc&& b) {
        a.records.insert(a.records.end(), std::make_move_iterator(b.records.begin()),
                         std::make_move_iterator(b.records.end()));
        for (auto& [e, st] : b.stats) {
          auto it = a.stats.find(e);
          if (it == a.stats.end()) {
            a.stats.emplace(e, std::move(st));
          } else {
            it->second.pairs += st.pairs;
            it->second.zero_total += st.zero_total;
            for (std::size_t k = 0; k < it->second.r_sum.size() && k < st.r_sum.size(); ++k)
              it->second.r_sum[k] += st.r_sum[k];
            it->second.min_r_top = std::min(it->second.min_r_top, st.min_r_top);
            it->second.max_r_top = std::max(it->second.max_r_top, st.max_r_top);
          }
        }
        a.truncations += b.truncations;
      });

  ExploreResult res;
  res.max_genus = max_genus;
  res.min_embedding_dim = min_embedding_dim;
  res.records = std::move(acc.records);
  std::sort(res.records.begin(), res.records.end(),
            [](const CensusRecord& a, const CensusRecord& b) {
              if (a.genus != b.genus) return a.genus < b.genus;
              return a.generators < b.generators;
            });
  for (std::size_t i = 0; i < res.records.size(); ++i)
    if (res.records[i].type >= res.records[i].embedding_dim) res.type_ge_e.push_back(i);
  for (auto& [e, st] : acc.stats) {
    if (st.pairs == 0) st.min_r_top = 0;
    res.stats.push_back(std::move(st));
  }
  res.truncation_events = acc.truncations;
  return res;
}

}  // namespace nsg
