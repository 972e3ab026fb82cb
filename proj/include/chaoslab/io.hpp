#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include <json.hpp>

#include "chaoslab/counterexample.hpp"
#include "chaoslab/witness.hpp"

namespace chaoslab {

// Exact distances are "a/b" strings; enclosures are {"lo": ..., "hi": ...}
// with 17-significant-digit decimal strings.
nlohmann::json distance_to_json(const DistanceValue& d);
DistanceValue distance_from_json(const nlohmann::json& j);

// Keys are emitted in sorted order (nlohmann::json objects are ordered maps),
// so the same certificate always serializes to the same bytes.
nlohmann::json certificate_to_json(const WitnessCertificate& cert);
// Throws InvalidInput on missing fields or malformed encodings.
WitnessCertificate certificate_from_json(const nlohmann::json& j);

nlohmann::json report_to_json(const VerificationReport& report, std::size_t depth);
nlohmann::json a_report_to_json(const AReport& report);
nlohmann::json series_to_json(const SeparationSeries& series);

// Header "n,distance,distance_exact"; distance_exact is "a/b" for exact
// values and empty for enclosures.
void write_series_csv(const SeparationSeries& series, std::ostream& os);
// Throws InvalidInput on an empty series, IoError if `path` is not writable.
void emit_series_csv(const SeparationSeries& series, const std::filesystem::path& path);

// "%.17g"
std::string format_double(double v);

}  // namespace chaoslab
