#pragma once

namespace valsemi {

inline constexpr const char* kToolName = "valsemi";
inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace valsemi
