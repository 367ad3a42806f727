#pragma once

#include <json.hpp>

#include "discode/criteria.hpp"
#include "discode/estimate.hpp"
#include "discode/gallery.hpp"
#include "discode/inverse.hpp"
#include "discode/spaces.hpp"
#include "discode/valence.hpp"

namespace discode {

using Json = nlohmann::ordered_json;

inline constexpr int kJsonSchema = 1;

/// {re, im}; non-finite parts serialise as null.
Json to_json(Complex z);
Json to_json(const std::vector<TracePoint>& trace);
Json to_json(const NormEstimate& e);
Json to_json(const ConditionReport& r);
Json to_json(const CountResult& c);
Json to_json(const VerifyReport& r);
Json to_json(const Separation& s);
Json to_json(const OmittedValues& o);
Json to_json(const TranslateNorm& t);

/// Serialises with the shortest representation that round-trips every double.
std::string dump(const Json& j);

}  // namespace discode
