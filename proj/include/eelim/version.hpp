#pragma once

namespace eelim {

inline constexpr const char* kVersion = "1.0.0";

}  // namespace eelim
