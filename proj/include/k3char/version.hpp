#pragma once

namespace k3char {

inline constexpr const char* kVersion = "1.0.0";
inline constexpr int kCacheSchema = 1;

}  // namespace k3char
