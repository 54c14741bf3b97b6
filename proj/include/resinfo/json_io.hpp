#pragma once

#include "json.hpp"
#include "resinfo/beliefs.hpp"
#include "resinfo/gaussian.hpp"

namespace resinfo {

/// Parse {"probs": [...]}.
DiscreteBelief belief_from_json(const nlohmann::json& j);

/// Parse {"regions": [[...indices...], ...]}; the alphabet size is the
/// largest index plus one.
SemanticPartition partition_from_json(const nlohmann::json& j);

/// Parse {"mean": [...], "cov": [[...], ...]}.
GaussianBelief gaussian_from_json(const nlohmann::json& j);

/// Parse {"w": [...], "T": t}.
HalfSpace halfspace_from_json(const nlohmann::json& j);

/// Parse {"m": 5, "a": 1.0}.
OrthantPolytope polytope_from_json(const nlohmann::json& j);

}  // namespace resinfo
