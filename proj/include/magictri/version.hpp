#pragma once

namespace magictri {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr const char* kTriFormatVersion = "1";

}  // namespace magictri
