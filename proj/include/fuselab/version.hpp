#pragma once

#include <string_view>

namespace fuselab {

inline constexpr std::string_view kToolName = "fuselab";
inline constexpr std::string_view kToolVersion = "0.1.0";

}  // namespace fuselab
