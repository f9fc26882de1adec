#pragma once

#include "syzdepth/asymptotics.hpp"
#include "syzdepth/depth.hpp"
#include "syzdepth/multigraded.hpp"
#include "syzdepth/stanley.hpp"

#include <json.hpp>

namespace syzdepth {

using Json = nlohmann::json;

// Decomposition: {"n", "k", "strategy", "pieces": [{"shift": [..], "removed": int|null}]}
Json to_json(const Decomposition& d);
Decomposition decomposition_from_json(const Json& j);

// Hooks: [{"shift": [..], "mu": [exponents], "generator": [..]}]
Json to_json(const HookAssignment& h);
HookAssignment hooks_from_json(const Json& j, int n);

// Big integers are written as decimal strings.
Json to_json(const PositivityReport& r);
Json to_json(const DepthResult& r);
Json to_json(const GammaSolution& s);
Json to_json(const StanleyReport& r);

}  // namespace syzdepth
