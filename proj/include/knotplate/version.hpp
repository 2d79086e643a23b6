#pragma once

namespace knotplate {

inline constexpr const char* version = "0.1.0";

}  // namespace knotplate
