#pragma once

// JSON and DOT serialization. JSON keys keep insertion order, so output is
// stable byte for byte.

#include <json.hpp>
#include <string>

#include "knotplate/complex.hpp"
#include "knotplate/diagram.hpp"
#include "knotplate/fundgroup.hpp"
#include "knotplate/medial.hpp"
#include "knotplate/presentation.hpp"

namespace knotplate {

using Json = nlohmann::ordered_json;

Json to_json(const ValidationReport& r);
Json to_json(const MedialGraph& m);
Json to_json(const SkeinGraph& s);
Json to_json(const SpanningTree& t);
Json to_json(const Presentation& p);
Json to_json(const ComplexityReport& r);
Json to_json(const AbelianInvariants& a);
Json to_json(const TietzeResult& r);
Json to_json(const TemplateComplex& tc);
Json to_json(const ComplexCounts& k);

// Inverses used for round-trips. Throw ParseError on schema violations.
Presentation presentation_from_json(const Json& j);
TemplateComplex complex_from_json(const Json& j);

std::string to_dot(const MedialGraph& m);
std::string to_dot(const SkeinGraph& s);

}  // namespace knotplate
