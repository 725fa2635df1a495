#pragma once

#include "taut/graph.hpp"
#include "taut/rational.hpp"
#include "taut/wk.hpp"

#include <json.hpp>

#include <map>

namespace taut {

using json = nlohmann::json;  // sorted keys give byte-stable output

json to_json(const Rational& r);
Rational rational_from_json(const json& j);

json to_json(const TailGraph& graph);
TailGraph tail_graph_from_json(const json& j);

json to_json(const GraphSum& sum);
GraphSum graph_sum_from_json(const json& j);

/// Wk memo table as {"entries": [{"g", "d", "value"}]}.
json wk_cache_to_json(const std::map<TauIndex, Rational>& entries);
std::map<TauIndex, Rational> wk_cache_from_json(const json& j);

}  // namespace taut
