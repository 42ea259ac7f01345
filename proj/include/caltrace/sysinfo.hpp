#pragma once

#include "json.hpp"

namespace caltrace {

// OS, CPU model, memory and core count of the running machine, for the
// manifest written next to benchmark results.
nlohmann::json hardware_manifest();

}  // namespace caltrace
