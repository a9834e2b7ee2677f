#pragma once

namespace jmodlab {

inline constexpr const char* kVersion = "1.0.0";

}  // namespace jmodlab
