#pragma once

namespace casinet {

inline constexpr const char* version = "0.1.0";

}  // namespace casinet
