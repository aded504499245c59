#pragma once

#include <nlohmann/json.hpp>

#include "abdim/paperlab.hpp"

namespace abdim {

using Json = nlohmann::ordered_json;

// Dimensions are integers, field elements are exact strings.
Json to_json(const ExtTable& t);
Json to_json(const FieldCtx& ctx, const Matrix& m);
Json to_json(const PValue& v);
Json to_json(const PerpVerdict& v);
Json to_json(const GdimVerdict& v);
Json to_json(const ABdimVerdict& v);
Json to_json(const ArcReport& r);
Json to_json(const SpotReport& s);
Json to_json(const CompleteResolutionReport& r);
Json to_json(const ExampleReport& r);
Json to_json(const IsoVerdict& v, const FieldCtx& ctx);

std::string pclass_name(PClass c);
std::string perp_kind_name(PerpKind k);
std::string gkind_name(GKind k);
std::string abkind_name(ABKind k);

}  // namespace abdim
