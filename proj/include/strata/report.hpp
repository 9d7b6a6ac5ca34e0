#ifndef STRATA_REPORT_HPP
#define STRATA_REPORT_HPP

#include <string>

#include <json.hpp>

#include "strata/ranges.hpp"
#include "strata/relation_check.hpp"
#include "strata/siegel_veech.hpp"

namespace strata {

// Field order in all JSON output is fixed (ordered_json), so identical
// inputs render byte-identically.
using json = nlohmann::ordered_json;

std::string status_name(CheckStatus s);
std::string series_name(SeriesKind k);

json record_to_json(const VerificationRecord& rec, bool include_timing = true);
std::string record_to_text(const VerificationRecord& rec);

json range_report_to_json(const RangeReport& rep);
std::string range_report_to_text(const RangeReport& rep);

json varying_report_to_json(const VaryingReport& rep);
std::string varying_report_to_text(const VaryingReport& rep);

json lift_to_json(const QuadraticSignature& nu);
std::string lift_to_text(const QuadraticSignature& nu);

}  // namespace strata

#endif
