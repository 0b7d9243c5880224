#pragma once

namespace perrdi {

inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace perrdi
