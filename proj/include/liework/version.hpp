#pragma once

namespace liework {
inline constexpr const char* kVersion = "0.1.0";
}
