#pragma once

namespace sl21 {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace sl21
