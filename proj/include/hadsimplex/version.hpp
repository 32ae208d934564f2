#pragma once

namespace hadsimplex {

inline constexpr const char kVersion[] = "1.0.0";

} // namespace hadsimplex
