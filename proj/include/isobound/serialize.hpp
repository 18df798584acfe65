#pragma once

#include "isobound/bounds.hpp"
#include "isobound/dessins.hpp"
#include "isobound/orbifold.hpp"
#include "isobound/report.hpp"
#include "isobound/shimizu.hpp"

#include <json.hpp>

#include <string>

namespace isobound {

// Insertion-ordered JSON keeps every rendering byte-deterministic.
using Json = nlohmann::ordered_json;

// Rationals travel as canonical "p/q" strings, enclosures as {"lo","hi"}.
Json to_json(const Rational& x);
Rational rational_from_json(const Json& j);

Json to_json(const Enclosure& e);
Enclosure enclosure_from_json(const Json& j);

Json to_json(const OrbifoldSignature& s);
OrbifoldSignature signature_from_json(const Json& j);

Json to_json(const Stratum& s);
Json to_json(const MinimumCertificate& c);

Json to_json(const CensusEntry& e);
// Header line {"tool","version","degree","cap","entries"} followed by one
// entry object per line, sorted; the on-disk census format.
std::string census_to_json_lines(const Census& c);
Json census_to_json(const Census& c);

Json to_json(const BoundCertificate& c);
BoundCertificate certificate_from_json(const Json& j);

Json to_json(const InequalityReport& r);

Json to_json(const FieldData& f);
FieldData field_from_json(const Json& j);

}  // namespace isobound
