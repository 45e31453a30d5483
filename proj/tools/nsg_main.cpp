// nsg: numerical semigroup toolkit CLI.
//
// Exit codes: 0 success, 2 verification violations, 3 truncation only,
// 64 usage error, 65 domain error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "nsg/enumerate.hpp"
#include "nsg/factorization.hpp"
#include "nsg/io.hpp"
#include "nsg/rf.hpp"
#include "nsg/semigroup.hpp"
#include "nsg/verify.hpp"

namespace {

constexpr int kExitUsage = 64;
constexpr int kExitDomain = 65;
constexpr int kDefaultGenusCap = 40;

std::string join64(const std::vector<std::int64_t>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(xs[i]);
  }
  return out;
}

int genus_cap() {
  int cap = kDefaultGenusCap;
  if (const char* env = std::getenv("NSG_MAX_GENUS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end && *end == '\0' && v > 0) cap = static_cast<int>(v);
  }
  return std::min(cap, nsg::detail::kGenusCap);
}

void check_genus(int max_genus) {
  const int cap = genus_cap();
  if (max_genus < 0 || max_genus > cap)
    throw CLI::ValidationError("--max-genus",
                               "must be between 0 and " + std::to_string(cap) +
                                   " (cap is adjustable via NSG_MAX_GENUS)");
}

// Writes to a file, or stdout when the path is "-".
void write_output(const std::string& path, const std::string& content) {
  if (path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw nsg::error("cannot open output file: " + path);
  out << content;
}

struct CommonArgs {
  std::vector<std::int64_t> gens;
};

void add_gens_option(CLI::App* cmd, CommonArgs& args) {
  cmd->add_option("--gens", args.gens, "comma-separated generators, e.g. --gens 6,7,9,10")
      ->required()
      ->delimiter(',')
      ->check(CLI::PositiveNumber);
}

void print_matrix(std::ostream& os, const nsg::RFMatrix& m) {
  for (int i = 0; i < m.dim; ++i) {
    for (int j = 0; j < m.dim; ++j) {
      if (j) os << ',';
      os << m.at(i, j);
    }
    os << '\n';
  }
}

}  // namespace

int run(int argc, char** argv) {
  CLI::App app{"numerical semigroup toolkit"};
  app.require_subcommand(1);

  // info
  CommonArgs info_args;
  bool info_json = false;
  auto* info = app.add_subcommand("info", "invariants of a semigroup");
  add_gens_option(info, info_args);
  info->add_flag("--json", info_json, "emit the JSON record");

  // factorize
  CommonArgs fact_args;
  std::int64_t fact_value = 0;
  bool fact_count = false;
  auto* fact = app.add_subcommand("factorize", "factorizations of an element");
  add_gens_option(fact, fact_args);
  fact->add_option("--s", fact_value, "element to factor")->required();
  fact->add_flag("--count", fact_count, "print only |Z(s)|");

  // rf
  CommonArgs rf_args;
  std::int64_t rf_value = 0;
  bool rf_count_only = false;
  std::uint64_t rf_limit = 0;
  auto* rf = app.add_subcommand("rf", "RF-matrices for a value outside the semigroup");
  add_gens_option(rf, rf_args);
  rf->add_option("--f", rf_value, "pseudo-Frobenius number to factor")->required();
  rf->add_flag("--count", rf_count_only, "print only the number of matrices");
  rf->add_option("--limit", rf_limit, "stop after N matrices (0 = no limit)");

  // lambda
  CommonArgs lambda_args;
  bool lambda_json = false;
  auto* lambda = app.add_subcommand("lambda", "lambda/M table for all ordered generator pairs");
  add_gens_option(lambda, lambda_args);
  lambda->add_flag("--json", lambda_json, "emit JSON");

  // gamma
  CommonArgs gamma_args;
  bool gamma_json = false;
  auto* gamma = app.add_subcommand("gamma", "Gamma multisets keyed by pseudo-Frobenius value");
  add_gens_option(gamma, gamma_args);
  gamma->add_flag("--json", gamma_json, "emit JSON");

  // census
  int census_genus = 0;
  int census_threads = 0;
  bool census_all = false;
  std::string census_csv_path, census_summary_path, census_svg_path;
  auto* census_cmd = app.add_subcommand("census", "genus-bounded census of the semigroup tree");
  census_cmd->add_option("--max-genus", census_genus, "genus bound")->required();
  census_cmd->add_option("--threads", census_threads, "worker threads (0 = all cores)");
  census_cmd->add_flag("--all", census_all,
                       "count every semigroup instead of the almost symmetric e >= 2 default");
  census_cmd->add_option("--csv", census_csv_path, "write genus,embedding_dim,type,count CSV ('-' = stdout)");
  census_cmd->add_option("--summary-csv", census_summary_path,
                         "write embedding_dim,type,count CSV ('-' = stdout)");
  census_cmd->add_option("--svg", census_svg_path, "write (e, t) scatter SVG ('-' = stdout)");

  // verify
  int verify_genus = 10;
  int verify_threads = 0;
  bool verify_json = false, verify_timings = false;
  std::string verify_checks = "all";
  auto* verify_cmd = app.add_subcommand("verify", "run the statement-verification suite");
  verify_cmd->add_option("--max-genus", verify_genus, "genus bound (default 10)");
  verify_cmd->add_option("--threads", verify_threads, "worker threads (0 = all cores)");
  verify_cmd->add_option("--checks", verify_checks,
                         "comma-separated subset of: golden,theorem,orthogonality,unique,"
                         "zeromatrix,zeronumber,onetwo,zeroplace,triplet,type4,e3bound,almostsym "
                         "(default: all)");
  verify_cmd->add_flag("--json", verify_json, "emit the JSON report");
  verify_cmd->add_flag("--timings", verify_timings, "include wall-clock timings in the output");

  // explore
  int explore_genus = 0;
  int explore_min_e = 5;
  int explore_threads = 0;
  bool explore_json_flag = false;
  auto* explore_cmd =
      app.add_subcommand("explore", "almost symmetric semigroups of high embedding dimension");
  explore_cmd->add_option("--max-genus", explore_genus, "genus bound")->required();
  explore_cmd->add_option("--min-e", explore_min_e, "minimum embedding dimension (>= 5)");
  explore_cmd->add_option("--threads", explore_threads, "worker threads (0 = all cores)");
  explore_cmd->add_flag("--json", explore_json_flag, "emit JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*info) {
      nsg::NumericalSemigroup s(info_args.gens);
      if (info_json) {
        std::cout << nsg::semigroup_json(s) << "\n";
      } else {
        std::cout << "gens: " << join64(s.generators()) << "\n"
                  << "multiplicity: " << s.multiplicity() << "\n"
                  << "embedding_dim: " << s.embedding_dim() << "\n"
                  << "frobenius: " << s.frobenius() << "\n"
                  << "genus: " << s.genus() << "\n"
                  << "gaps: " << join64(s.gaps()) << "\n"
                  << "apery: " << join64(s.apery()) << "\n"
                  << "pf: " << join64(s.pseudo_frobenius()) << "\n"
                  << "type: " << s.type() << "\n"
                  << "almost_symmetric: " << (s.almost_symmetric() ? "true" : "false") << "\n"
                  << "symmetric: " << (s.symmetric() ? "true" : "false") << "\n";
      }
      return 0;
    }

    if (*fact) {
      nsg::NumericalSemigroup s(fact_args.gens);
      if (fact_count) {
        std::cout << nsg::count_factorizations(s, fact_value) << "\n";
      } else {
        for (const auto& f : nsg::factorizations(s, fact_value))
          std::cout << join64(f.coeffs) << "\n";
      }
      return 0;
    }

    if (*rf) {
      nsg::NumericalSemigroup s(rf_args.gens);
      nsg::RFMatrixCursor cursor(s, rf_value);
      if (rf_count_only) {
        std::cout << cursor.count() << "\n";
        return 0;
      }
      nsg::RFMatrix m;
      std::uint64_t printed = 0;
      while (cursor.next(m)) {
        if (printed) std::cout << "\n";
        print_matrix(std::cout, m);
        if (++printed == rf_limit) break;
      }
      return 0;
    }

    if (*lambda) {
      nsg::NumericalSemigroup s(lambda_args.gens);
      const auto table = nsg::lambda_table(s);
      if (lambda_json) {
        std::string out = "{\"e\":" + std::to_string(table.dim) + ",\"entries\":[";
        bool first = true;
        for (int i = 0; i < table.dim; ++i)
          for (int j = 0; j < table.dim; ++j) {
            if (i == j) continue;
            if (!first) out += ",";
            first = false;
            out += "{\"i\":" + std::to_string(i + 1) + ",\"j\":" + std::to_string(j + 1) +
                   ",\"lambda\":" + std::to_string(table.lambda_at(i, j)) +
                   ",\"m\":" + std::to_string(table.m_at(i, j)) + "}";
          }
        out += "]}";
        std::cout << out << "\n";
      } else {
        std::cout << "i,j,lambda,m\n";
        for (int i = 0; i < table.dim; ++i)
          for (int j = 0; j < table.dim; ++j) {
            if (i == j) continue;
            std::cout << i + 1 << ',' << j + 1 << ',' << table.lambda_at(i, j) << ','
                      << table.m_at(i, j) << "\n";
          }
      }
      return 0;
    }

    if (*gamma) {
      nsg::NumericalSemigroup s(gamma_args.gens);
      const auto idx = nsg::gamma_index(s);
      if (gamma_json) {
        std::string out = "{\"total\":" + std::to_string(idx.total) + ",\"per_pf\":[";
        for (std::size_t k = 0; k < idx.per_pf.size(); ++k) {
          if (k) out += ",";
          out += "{\"f\":" + std::to_string(idx.per_pf[k].f) + ",\"pairs\":[";
          for (std::size_t p = 0; p < idx.per_pf[k].pairs.size(); ++p) {
            if (p) out += ",";
            out += "[" + std::to_string(idx.per_pf[k].pairs[p].first + 1) + "," +
                   std::to_string(idx.per_pf[k].pairs[p].second + 1) + "]";
          }
          out += "]}";
        }
        out += "]}";
        std::cout << out << "\n";
      } else {
        for (const auto& entry : idx.per_pf) {
          std::cout << "f=" << entry.f << ":";
          for (const auto& [i, j] : entry.pairs) std::cout << " (" << i + 1 << "," << j + 1 << ")";
          std::cout << "  size=" << entry.pairs.size() << "\n";
        }
        std::cout << "total=" << idx.total << "\n";
      }
      return 0;
    }

    if (*census_cmd) {
      check_genus(census_genus);
      int stdout_targets = 0;
      for (const auto& p : {census_csv_path, census_summary_path, census_svg_path})
        if (p == "-") ++stdout_targets;
      if (stdout_targets > 1)
        throw CLI::ValidationError("--csv/--summary-csv/--svg", "at most one '-' output");

      nsg::CensusOptions opts;
      opts.walk.threads = census_threads;
      if (census_all) opts.filter = [](const nsg::TreeView&) { return true; };
      const nsg::CensusResult result = nsg::census(census_genus, opts);

      if (!census_csv_path.empty()) write_output(census_csv_path, nsg::census_csv(result));
      if (!census_summary_path.empty())
        write_output(census_summary_path, nsg::census_summary_csv(result));
      if (!census_svg_path.empty()) write_output(census_svg_path, nsg::census_svg(result));

      std::ostream& summary_os = stdout_targets > 0 ? std::cerr : std::cout;
      summary_os << nsg::census_text(result);
      return 0;
    }

    if (*verify_cmd) {
      check_genus(verify_genus);
      bool run_golden = false, run_theorem = false;
      std::vector<nsg::Check> lemma_checks;
      {
        std::stringstream ss(verify_checks);
        std::string item;
        while (std::getline(ss, item, ',')) {
          if (item.empty()) continue;
          if (item == "all") {
            run_golden = run_theorem = true;
            lemma_checks = nsg::all_checks();
          } else if (item == "golden") {
            run_golden = true;
          } else if (item == "theorem") {
            run_theorem = true;
          } else if (auto c = nsg::parse_check(item)) {
            lemma_checks.push_back(*c);
          } else {
            throw CLI::ValidationError("--checks", "unknown check: " + item);
          }
        }
      }

      nsg::VerifyOptions opts;
      opts.walk.threads = verify_threads;

      nsg::VerificationReport report;
      report.max_genus = verify_genus;
      if (run_golden) {
        auto part = nsg::golden_examples();
        for (auto& c : part.checks) report.checks.push_back(std::move(c));
        report.wall_seconds += part.wall_seconds;
      }
      if (run_theorem) {
        auto part = nsg::verify_theorem_main(verify_genus, opts);
        for (auto& c : part.checks) report.checks.push_back(std::move(c));
        report.wall_seconds += part.wall_seconds;
      }
      if (!lemma_checks.empty()) {
        auto part = nsg::verify_lemmas(verify_genus, lemma_checks, opts);
        for (auto& c : part.checks) report.checks.push_back(std::move(c));
        report.wall_seconds += part.wall_seconds;
      }

      std::cout << (verify_json ? nsg::report_json(report, verify_timings)
                                : nsg::report_text(report, verify_timings));
      return report.exit_code();
    }

    if (*explore_cmd) {
      check_genus(explore_genus);
      if (explore_min_e < 5) throw CLI::ValidationError("--min-e", "must be >= 5");
      nsg::VerifyOptions opts;
      opts.walk.threads = explore_threads;
      const nsg::ExploreResult result = nsg::explore_high_e(explore_genus, explore_min_e, opts);
      std::cout << (explore_json_flag ? nsg::explore_json(result) : nsg::explore_text(result));
      return 0;
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const nsg::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  }
  return 0;
}

int main(int argc, char** argv) { return run(argc, argv); }
