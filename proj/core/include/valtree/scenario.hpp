#pragma once

#include <filesystem>
#include <string>

#include <nlohmann/json.hpp>

#include "valtree/probe.hpp"
#include "valtree/unipotent.hpp"

namespace valtree {

/// Parses "padic(p)", "order_at_zero", "order_at_infinity", "order_at(<poly>)".
/// Throws Errc::parse_error.
Valuation parse_valuation(const std::string& text);

/// Builds and validates a scenario; generators must be SL(n) over the declared
/// field. Throws Errc::parse_error and the validation codes.
GroupScenario scenario_from_json(const nlohmann::json& j);
GroupScenario load_scenario(const std::filesystem::path& file);

nlohmann::json to_json(const Mat& m);
nlohmann::json to_json(const Vertex& x);
nlohmann::json to_json(const RankBounds& rb);
nlohmann::json to_json(const ProfileRow& row);

/// "R,C,count,min_disp,max_disp" rows.
std::string profile_csv(const Profile& p);

}  // namespace valtree
