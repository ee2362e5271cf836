#pragma once

namespace abexp {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace abexp
