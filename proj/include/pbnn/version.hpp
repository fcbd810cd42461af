#pragma once

namespace pbnn {

inline constexpr const char* kToolName = "pbnn";
inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace pbnn
