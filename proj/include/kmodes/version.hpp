#pragma once

namespace kmodes {

inline constexpr const char* kToolkitName = "kmodes";
inline constexpr const char* kVersion = "0.1.0";

}  // namespace kmodes
