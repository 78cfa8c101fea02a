#pragma once

namespace kt {

inline constexpr const char* toolName = "killer-toolkit";
inline constexpr const char* toolVersion = "1.0.0";

}
