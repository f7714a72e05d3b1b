#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "turan/bounds.hpp"
#include "turan/capacity.hpp"
#include "turan/geometry.hpp"
#include "turan/norms.hpp"
#include "turan/optimizer.hpp"

namespace turan {

using Json = nlohmann::ordered_json;

inline constexpr const char* kToolVersion = "0.1.0";

struct RunManifest {
  std::string command;
  std::vector<std::string> inputs;
  Json config = Json::object();
  std::string version = kToolVersion;
  std::optional<std::string> timestamp;  // only when requested, so reports stay reproducible
};

/// Finite numbers as JSON numbers; infinities and NaN as the strings "inf", "-inf", "nan".
Json number(double x);
Json point(Point z);

void to_json(Json& j, const RunManifest& m);
void to_json(Json& j, const GeometrySummary& s);
void to_json(Json& j, const BoundaryMeasureReport& r);
void to_json(Json& j, const InequalityCheck& c);
void to_json(Json& j, const HMassCheck& c);
void to_json(Json& j, const GabrielCheck& c);
void to_json(Json& j, const PointwiseCheck& c);
void to_json(Json& j, const BoundCertificate& c);
void to_json(Json& j, const LowerBoundSummary& s);
void to_json(Json& j, const FCheckReport& r);
void to_json(Json& j, const UpperConstruction& u);
void to_json(Json& j, const SearchResult& r);
void to_json(Json& j, const SuiteEntry& e);
void to_json(Json& j, const SuiteReport& r);
void to_json(Json& j, const FeketeEstimate& e);

/// {"manifest": ..., "result": ...}, two-space indented, trailing newline.
std::string render_report(const RunManifest& manifest, const Json& result);

/// Domain document: {"type": "polygon"|"disk"|"ellipse", ...}. Throws InvalidInput naming the field.
ConvexDomain parse_domain(const Json& j);
/// Capacity sets additionally accept {"type": "segment", "a": [x,y], "b": [x,y]} and
/// {"type": "intervals", "intervals": [[lo,hi], ...]}.
CompactSet parse_compact_set(const Json& j);
/// {"zeros": [[re, im], ...]}.
ZeroSet parse_zeros(const Json& j);

/// Reads and parses a JSON file; InvalidInput when unreadable or malformed.
Json read_json_file(const std::string& path);

/// Parses "inf"/"infinity" or a decimal number.
double parse_q(const std::string& text);

void write_trace_csv(std::ostream& os, const SearchResult& r);
void write_suite_csv(std::ostream& os, const SuiteReport& r);

}  // namespace turan
