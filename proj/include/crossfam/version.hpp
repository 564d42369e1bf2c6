#pragma once

namespace crossfam {

inline constexpr const char* kVersion = "0.1.0";

}
