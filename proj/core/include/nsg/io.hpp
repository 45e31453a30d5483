#pragma once

#include <string>

#include "nsg/enumerate.hpp"
#include "nsg/semigroup.hpp"
#include "nsg/verify.hpp"

namespace nsg {

/// One-line JSON record with the stable field set
/// {"gens","frobenius","genus","pf","type","almost_symmetric"}.
std::string semigroup_json(const NumericalSemigroup& s);

/// CSV of matched census cells: header `genus,embedding_dim,type,count`,
/// rows sorted by (genus, e, t).
std::string census_csv(const CensusResult& r);

/// CSV of (e, t) totals: header `embedding_dim,type,count`.
std::string census_summary_csv(const CensusResult& r);

/// Scatter plot of the (e, t) totals; point area grows with log10(count).
std::string census_svg(const CensusResult& r);

/// Human-readable census summary (totals plus per-genus visited/matched).
std::string census_text(const CensusResult& r);

/// Machine report. Wall-clock fields are emitted only when `with_timings`
/// is set, so that default output is byte-identical across runs and thread
/// counts.
std::string report_json(const VerificationReport& r, bool with_timings = false);

/// Aligned, human-readable report table.
std::string report_text(const VerificationReport& r, bool with_timings = false);

std::string explore_json(const ExploreResult& r);
std::string explore_text(const ExploreResult& r);

}  // namespace nsg
