#pragma once

namespace falc {

inline constexpr const char* kToolVersion = "falc 0.1.0";

}  // namespace falc
