#pragma once

#include <nlohmann/json.hpp>

#include "baxter/catalog.hpp"
#include "baxter/check.hpp"

namespace baxter {

using json = nlohmann::ordered_json;

/// {"dim": N, "entries": [["p/q", ...], ...]}
json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const json& j);

/// {"passed": bool, "witness": {...} | null}
json report_to_json(const CheckReport& r);

/// {"family": "S4", "m": 2, "params": {"a": "0", ...}}
json instance_to_json(const FamilyInstance& f);
FamilyInstance instance_from_json(const json& j);

}  // namespace baxter
