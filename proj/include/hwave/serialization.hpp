#pragma once

#include <nlohmann/json_fwd.hpp>
#include <string>

#include "hwave/line_fn.hpp"
#include "hwave/plancherel.hpp"

namespace hwave {

/// Segments serialize as arrays [t0, t1, Re c, Im c, omega]; fields as
/// {set, rule, nodes: [{lambda, weight, u, v}]}.
nlohmann::json to_json(const PiecewiseExpFunction& f);
PiecewiseExpFunction piecewise_from_json(const nlohmann::json& j);

nlohmann::json to_json(const RankOneField& f);
RankOneField field_from_json(const nlohmann::json& j);

void save_field(const RankOneField& f, const std::string& path);
RankOneField load_field(const std::string& path);

}  // namespace hwave
