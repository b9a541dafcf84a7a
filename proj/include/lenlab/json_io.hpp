#pragma once

#include <json.hpp>

#include "lenlab/graph.hpp"
#include "lenlab/kernels.hpp"
#include "lenlab/length.hpp"

namespace lenlab::io {

using json = nlohmann::ordered_json;

json to_json(const groups::GroupSpec& g);
groups::GroupSpec group_from_json(const json& j);

/// {"group": ..., "entries": [[token, value | {"capped": M}], ...], "exact_radius": r}
json to_json(const lengths::LengthTable& t);
lengths::LengthTable table_from_json(const json& j);

/// {"group": ..., "support": [[token, w], ...], "default": {"rule": ..., "base": ...},
///  "enumeration": [tokens]}
json to_json(const lengths::WeightSpec& w);
lengths::WeightSpec weight_from_json(const json& j);

/// {"vertices": [names], "edges": [[i, j], ...]} with i < j, deterministic order.
json to_json(const graphs::FiniteGraph& g);
graphs::FiniteGraph graph_from_json(const json& j);

json to_json(const kernels::ConstructionReport& r);

/// Human-readable table for terminals.
std::string render_report(const kernels::ConstructionReport& r);

} // namespace lenlab::io
