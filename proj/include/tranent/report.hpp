#pragma once

#include <string>

#include <json.hpp>

#include "tranent/entropy.hpp"
#include "tranent/horseshoe.hpp"
#include "tranent/specification.hpp"

namespace tranent {

using Json = nlohmann::json;  // std::map objects, so keys come out sorted

Json to_json(const Rational& q);
Json to_json(const Interval& i);
Json to_json(const IntervalUnion& u);
Json to_json(const QuasiHorseshoe& h);
Json to_json(const Verdict& v);
Json to_json(const FinderResult& r);
Json to_json(const AmplifyResult& a);
Json to_json(const DichotomyResult& d);
Json to_json(const LogBound& b);
Json to_json(const LogComparison& c);
Json to_json(const EntropyBounds& b);
Json to_json(const RootEnclosure& r);
Json to_json(const CoveringMatrix& m);
Json to_json(const RefutationCertificate& c);
Json to_json(const SpecVerdict& v);

/// Reads a certificate written by to_json(QuasiHorseshoe). Extra fields such
/// as "kind" are ignored; malformed ones raise ValidationError.
QuasiHorseshoe certificate_from_json(const Json& j);

/// Two-space indented, key-sorted text with a trailing newline.
std::string render(const Json& j);

}  // namespace tranent
