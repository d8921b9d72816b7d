#pragma once

namespace reachkit {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace reachkit
