#pragma once

namespace mclab {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace mclab
