#pragma once

namespace gmpb {

inline constexpr const char* kVersion = "0.1.0";

} // namespace gmpb
