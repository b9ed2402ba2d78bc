#pragma once

namespace qeval {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace qeval
