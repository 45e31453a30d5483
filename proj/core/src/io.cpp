#include "nsg/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "json.hpp"

namespace nsg {
namespace {

using ordered_json = nlohmann::ordered_json;

std::string join64(const std::vector<std::int64_t>& xs) {
  std::ostringstream os;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) os << ',';
    os << xs[i];
  }
  return os.str();
}

std::string fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
  return buf;
}

ordered_json check_json(const CheckReport& c, bool with_timings) {
  ordered_json j;
  j["name"] = c.name;
  j["population"] = c.population;
  j["max_genus"] = c.max_genus;
  j["scanned"] = c.scanned;
  j["violations"] = ordered_json::array();
  for (const auto& v : c.violations) {
    ordered_json vj;
    vj["gens"] = v.generators;
    vj["detail"] = v.detail;
    j["violations"].push_back(vj);
  }
  j["truncation_events"] = c.truncation_events;
  j["passed"] = c.passed();
  if (!c.stats.empty()) {
    ordered_json s;
    for (const auto& [k, v] : c.stats) s[k] = v;
    j["stats"] = s;
  }
  if (with_timings) j["wall_seconds"] = c.wall_seconds;
  return j;
}

}  // namespace

std::string semigroup_json(const NumericalSemigroup& s) {
  ordered_json j;
  j["gens"] = s.generators();
  j["frobenius"] = s.frobenius();
  j["genus"] = s.genus();
  j["pf"] = s.pseudo_frobenius();
  j["type"] = s.type();
  j["almost_symmetric"] = s.almost_symmetric();
  return j.dump();
}

std::string census_csv(const CensusResult& r) {
  std::ostringstream os;
  os << "genus,embedding_dim,type,count\n";
  for (const auto& c : r.cells)
    os << c.genus << ',' << c.embedding_dim << ',' << c.type << ',' << c.count << '\n';
  return os.str();
}

std::string census_summary_csv(const CensusResult& r) {
  std::ostringstream os;
  os << "embedding_dim,type,count\n";
  for (const auto& [e, t, count] : r.totals_by_e_t) os << e << ',' << t << ',' << count << '\n';
  return os.str();
}

std::string census_svg(const CensusResult& r) {
  int max_e = 2, max_t = 1;
  std::uint64_t max_count = 1;
  for (const auto& [e, t, count] : r.totals_by_e_t) {
    max_e = std::max(max_e, e);
    max_t = std::max(max_t, static_cast<int>(t));
    max_count = std::max(max_count, count);
  }
  const int cell = 28, margin = 56;
  const int width = margin + (max_e + 1) * cell;
  const int height = margin + (max_t + 1) * cell;
  const auto x_of = [&](int e) { return margin + (e - 1) * cell; };
  const auto y_of = [&](std::int64_t t) { return height - margin - static_cast<int>(t - 1) * cell; };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
     << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  os << "<text x=\"" << width / 2 << "\" y=\"16\" font-family=\"sans-serif\" font-size=\"12\" "
        "text-anchor=\"middle\">almost symmetric semigroups up to genus "
     << r.max_genus << " (area ~ log count)</text>\n";
  // axes
  os << "<line x1=\"" << x_of(1) - cell / 2 << "\" y1=\"" << y_of(1) + cell / 2 << "\" x2=\""
     << x_of(max_e) + cell / 2 << "\" y2=\"" << y_of(1) + cell / 2
     << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
  os << "<line x1=\"" << x_of(1) - cell / 2 << "\" y1=\"" << y_of(1) + cell / 2 << "\" x2=\""
     << x_of(1) - cell / 2 << "\" y2=\"" << y_of(max_t) - cell / 2
     << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
  for (int e = 1; e <= max_e; ++e)
    os << "<text x=\"" << x_of(e) << "\" y=\"" << y_of(1) + cell / 2 + 14
       << "\" font-family=\"sans-serif\" font-size=\"10\" text-anchor=\"middle\">" << e
       << "</text>\n";
  for (int t = 1; t <= max_t; ++t)
    os << "<text x=\"" << x_of(1) - cell / 2 - 6 << "\" y=\"" << y_of(t) + 3
       << "\" font-family=\"sans-serif\" font-size=\"10\" text-anchor=\"end\">" << t
       << "</text>\n";
  os << "<text x=\"" << width / 2 << "\" y=\"" << height - 8
     << "\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"middle\">embedding "
        "dimension</text>\n";
  os << "<text x=\"14\" y=\"" << height / 2
     << "\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"middle\" transform=\"rotate(-90 "
        "14 "
     << height / 2 << ")\">type</text>\n";

  for (const auto& [e, t, count] : r.totals_by_e_t) {
    const double area = 1.0 + std::log10(static_cast<double>(count));
    const double radius = 3.5 * std::sqrt(area);
    os << "<circle cx=\"" << x_of(e) << "\" cy=\"" << y_of(t) << "\" r=\"" << fixed(radius, 2)
       << "\" fill=\"steelblue\" fill-opacity=\"0.75\"><title>e=" << e << " t=" << t
       << " count=" << count << "</title></circle>\n";
  }
  os << "</svg>\n";
  return os.str();
}

std::string census_text(const CensusResult& r) {
  std::ostringstream os;
  os << "census up to genus " << r.max_genus << ": visited " << r.visited << " semigroups, "
     << r.matched << " matched the filter\n";
  os << "genus  visited  matched\n";
  for (std::size_t g = 0; g < r.visited_per_genus.size(); ++g) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%5zu  %7llu  %7llu\n", g,
                  static_cast<unsigned long long>(r.visited_per_genus[g]),
                  static_cast<unsigned long long>(r.matched_per_genus[g]));
    os << buf;
  }
  return os.str();
}

std::string report_json(const VerificationReport& r, bool with_timings) {
  ordered_json j;
  j["max_genus"] = r.max_genus;
  j["passed"] = r.passed();
  j["violations_total"] = r.violation_total();
  j["truncation_total"] = r.truncation_total();
  j["exit_code"] = r.exit_code();
  if (with_timings) j["wall_seconds"] = r.wall_seconds;
  j["checks"] = ordered_json::array();
  for (const auto& c : r.checks) j["checks"].push_back(check_json(c, with_timings));
  return j.dump(2) + "\n";
}

std::string report_text(const VerificationReport& r, bool with_timings) {
  std::size_t name_w = 4, pop_w = 10;
  for (const auto& c : r.checks) {
    name_w = std::max(name_w, c.name.size());
    pop_w = std::max(pop_w, c.population.size());
  }
  std::ostringstream os;
  os << "verification up to genus " << r.max_genus << "\n";
  char buf[256];
  std::snprintf(buf, sizeof(buf), "%-*s  %-*s  %10s  %10s  %10s  %s\n", static_cast<int>(name_w),
                "name", static_cast<int>(pop_w), "population", "scanned", "violations",
                "truncated", "status");
  os << buf;
  for (const auto& c : r.checks) {
    std::snprintf(buf, sizeof(buf), "%-*s  %-*s  %10llu  %10zu  %10llu  %s\n",
                  static_cast<int>(name_w), c.name.c_str(), static_cast<int>(pop_w),
                  c.population.c_str(), static_cast<unsigned long long>(c.scanned),
                  c.violations.size(), static_cast<unsigned long long>(c.truncation_events),
                  c.passed() ? "pass" : "FAIL");
    os << buf;
    for (const auto& [k, v] : c.stats) os << "    " << k << " = " << v << "\n";
    for (const auto& v : c.violations)
      os << "    gens=<" << join64(v.generators) << "> " << v.detail << "\n";
    if (with_timings) os << "    wall_seconds = " << fixed(c.wall_seconds, 3) << "\n";
  }
  os << (r.passed() ? "RESULT: pass" : "RESULT: FAIL") << " (" << r.violation_total()
     << " violations, " << r.truncation_total() << " truncation events)\n";
  return os.str();
}

std::string explore_json(const ExploreResult& r) {
  ordered_json j;
  j["max_genus"] = r.max_genus;
  j["min_embedding_dim"] = r.min_embedding_dim;
  j["records"] = ordered_json::array();
  for (const auto& rec : r.records) {
    ordered_json rj;
    rj["gens"] = rec.generators;
    rj["genus"] = rec.genus;
    rj["embedding_dim"] = rec.embedding_dim;
    rj["type"] = rec.type;
    rj["frobenius"] = rec.frobenius;
    rj["type_ge_e"] = rec.type >= rec.embedding_dim;
    j["records"].push_back(rj);
  }
  j["zero_profiles"] = ordered_json::array();
  for (const auto& st : r.stats) {
    ordered_json sj;
    sj["embedding_dim"] = st.embedding_dim;
    sj["pairs_sampled"] = st.pairs;
    sj["zero_total"] = st.zero_total;
    sj["r_sum"] = st.r_sum;
    sj["min_r_top"] = st.min_r_top;
    sj["max_r_top"] = st.max_r_top;
    j["zero_profiles"].push_back(sj);
  }
  j["truncation_events"] = r.truncation_events;
  return j.dump(2) + "\n";
}

std::string explore_text(const ExploreResult& r) {
  std::ostringstream os;
  os << "almost symmetric semigroups with e >= " << r.min_embedding_dim << " up to genus "
     << r.max_genus << ": " << r.records.size() << " found\n";
  for (const auto& rec : r.records) {
    os << "  genus=" << rec.genus << " e=" << rec.embedding_dim << " t=" << rec.type
       << " F=" << rec.frobenius << " gens=<" << join64(rec.generators) << ">"
       << (rec.type >= rec.embedding_dim ? "  [t >= e]" : "") << "\n";
  }
  if (!r.stats.empty()) {
    os << "zero profiles over sampled RF-matrix pairs (r_i = rows with >= i zeroes):\n";
    for (const auto& st : r.stats) {
      os << "  e=" << st.embedding_dim << " pairs=" << st.pairs;
      if (st.pairs > 0) {
        os << " mean_zeroes=" << fixed(static_cast<double>(st.zero_total) /
                                           static_cast<double>(st.pairs),
                                       2);
        for (std::size_t k = 0; k < st.r_sum.size(); ++k)
          os << " mean_r" << k + 1 << "="
             << fixed(static_cast<double>(st.r_sum[k]) / static_cast<double>(st.pairs), 2);
        os << " r" << st.r_sum.size() << "_range=[" << st.min_r_top << "," << st.max_r_top << "]";
      }
      os << "\n";
    }
  }
  if (r.truncation_events > 0)
    os << "note: " << r.truncation_events << " pair enumerations were sampled (capped)\n";
  return os.str();
}

}  // namespace nsg
