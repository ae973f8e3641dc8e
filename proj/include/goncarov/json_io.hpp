#pragma once

#include <string>

#include <json.hpp>

#include "goncarov/operator_calculus.hpp"
#include "goncarov/poly.hpp"
#include "goncarov/series.hpp"

namespace gonc {

// {"terms":[{"coeff":"p/q","monomial":{"w2":1,"x":1}}, ...]}, canonical order.
nlohmann::json poly_to_json(const MultiPoly& p);
MultiPoly poly_from_json(const nlohmann::json& j);

// {"order":N,"terms":[{"coeff":"p/q","monomial":{...},"power":k}, ...]}
nlohmann::json series_to_json(const TruncatedSeries& s);
TruncatedSeries series_from_json(const nlohmann::json& j);

// {"sequence":[<poly>, ...]}
nlohmann::json sequence_to_json(const PolySequence& p);
PolySequence sequence_from_json(const nlohmann::json& j);

} // namespace gonc
