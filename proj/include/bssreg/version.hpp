#pragma once

namespace bssreg {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace bssreg
