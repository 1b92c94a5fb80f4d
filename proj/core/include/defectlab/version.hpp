#pragma once

namespace defectlab {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace defectlab
