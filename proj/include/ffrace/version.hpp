#pragma once

namespace ffrace {

inline constexpr const char* kToolVersion = "1.0.0";

}  // namespace ffrace
