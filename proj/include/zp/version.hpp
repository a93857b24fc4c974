#pragma once

namespace zp {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace zp
