#pragma once

#include <string_view>

namespace conerotor {

inline constexpr std::string_view kToolName = "conerotor";
inline constexpr std::string_view kVersion = "0.1.0";

}  // namespace conerotor
