#pragma once

namespace genusgate {

inline constexpr const char* version = "0.1.0";

} // namespace genusgate
