#pragma once

// JSON encoding of specs, classifications and reports (schema "extremal-disc/1").
// Complex values are {"re": x, "im": y}; decoders also take a bare number or a
// string token in the command-line number grammar.

#include <json.hpp>

#include "extremal_disc/classify.hpp"

namespace xdisc::cli {

using json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "extremal-disc/1";

json to_json(Complex z);
json to_json(const MoebiusSpec& m);
json to_json(const SelfMapSpec& g);
json to_json(const Mat2& m);
json to_json(const RIIMapSpec& h);
json to_json(const LeftInverseSpec& f);
json to_json(const ZSpec& z);
json to_json(const GeodesicSpec& g);
json to_json(const DomainTag& d);
json to_json(const Classification& c);
json to_json(const VerificationReport& r);
json to_json(const DistinctReport& r);
json to_json(const EqualityReport& r);
json to_json(const CVec& v);

Complex complex_from(const json& j);
MoebiusSpec moebius_from(const json& j);
SelfMapSpec selfmap_from(const json& j);
Mat2 mat2_from(const json& j);
RIIMapSpec rii_map_from(const json& j);
LeftInverseSpec left_inverse_from(const json& j);
ZSpec z_from(const json& j);
GeodesicSpec geodesic_from(const json& j);
DomainTag domain_from(const json& j);
Classification classification_from(const json& j);

}  // namespace xdisc::cli
