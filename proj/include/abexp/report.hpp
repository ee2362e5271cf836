#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "abexp/core.hpp"
#include "abexp/dimension.hpp"
#include "abexp/dynamics.hpp"
#include "abexp/multiplicity.hpp"

namespace abexp {

/// Exact values serialize as strings ("p/q" or "p"), never as floats.
void to_json(nlohmann::json& j, const Rational& r);

/// Counts that fit in an unsigned 64-bit JSON number are emitted as
/// numbers, larger ones as decimal strings.
nlohmann::json mpz_to_json(const mpz_class& z);

void to_json(nlohmann::json& j, const Params& p);
void to_json(nlohmann::json& j, const Interval& iv);
void to_json(nlohmann::json& j, const AffineMap& m);
void to_json(nlohmann::json& j, const EventuallyPeriodicWord& w);
void to_json(nlohmann::json& j, const OrbitStats& s);
void to_json(nlohmann::json& j, const DensityHistogram& h);
void to_json(nlohmann::json& j, const PrefixCount& pc);
void to_json(nlohmann::json& j, const Enumeration& e);
void to_json(nlohmann::json& j, const UniquenessVerdict& v);
void to_json(nlohmann::json& j, const UniquePeriodicPoint& pt);
void to_json(nlohmann::json& j, const LanguageInfo& info);
void to_json(nlohmann::json& j, const LanguageCheck& c);
void to_json(nlohmann::json& j, const LanguageReport& r);
void to_json(nlohmann::json& j, const RegressionPoint& pt);
void to_json(nlohmann::json& j, const Regression& reg);
void to_json(nlohmann::json& j, const DimensionResult& res);
void to_json(nlohmann::json& j, const OverlapPair& pair);

const char* to_string(LanguageWordStatus s);

/// Comma-separated digit list, e.g. "0,1,2"; empty input is the empty word.
DigitWord parse_digit_word(std::string_view text);

/// "preperiod|period" with comma-separated digits, e.g. "|0,1,2" or "1,0|2".
EventuallyPeriodicWord parse_periodic_word(std::string_view text);

/// CSV exports. Each returns a header line plus one row per entry.
std::string csv_counts(const PrefixCount& pc);
std::string csv_first_hits(const OrbitStats& s);
std::string csv_density(const DensityHistogram& h);
std::string csv_regression(const Regression& reg);
std::string csv_unique_points(const std::vector<UniquePeriodicPoint>& pts);

}  // namespace abexp
