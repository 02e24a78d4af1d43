#pragma once

namespace vines {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace vines
