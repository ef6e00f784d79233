#pragma once

namespace cblocks {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace cblocks
