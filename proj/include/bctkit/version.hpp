#pragma once

namespace bctkit {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace bctkit
