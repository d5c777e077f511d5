#pragma once

namespace anirabi {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace anirabi
