#pragma once

namespace coverlab {

inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace coverlab
