#pragma once

#include "json.hpp"

#include "qlorentz/tensor/tmap.hpp"

namespace qlorentz {

// {"in": "(U,B)", "out": "(B,U)", "entries": [["1", "0", ...], ...]}
nlohmann::json to_json(const TMap& m);

}  // namespace qlorentz
