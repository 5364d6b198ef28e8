#pragma once

#include "json.hpp"

namespace frob {

/// Keys are emitted in insertion order so documents read like their schemas.
using Json = nlohmann::ordered_json;

} // namespace frob
