#pragma once

#include <json.hpp>

#include "trop/cells.hpp"
#include "trop/embed.hpp"
#include "trop/picard.hpp"

namespace trop {

using Json = nlohmann::json;

// Throws Error naming the unexpected key.
void require_keys(const Json& obj, const std::vector<std::string>& allowed,
                  const std::vector<std::string>& required, const std::string& what);

MetricGraph graph_from_json(const Json& j);
Json graph_to_json(const MetricGraph& g);

Divisor divisor_from_json(const MetricGraph& g, const Json& j);
Json divisor_to_json(const MetricGraph& g, const Divisor& d);

PLFunction function_from_json(GraphPtr g, const Json& j);
Json function_to_json(const PLFunction& f);

Json complex_to_json(const SimplicialComplex& c);
Json cell_complex_to_json(const CellComplex& cc);
Json curve_to_json(const EmbeddedCurve& c);
Json critical_group_to_json(const CriticalGroup& cg, int level);

Json load_json_file(const std::string& path);

}  // namespace trop
