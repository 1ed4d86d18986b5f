#pragma once

namespace nilsol {

inline constexpr const char* kToolName = "nilsol";
inline constexpr const char* kVersion = "0.1.0";

}  // namespace nilsol
