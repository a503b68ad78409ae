#pragma once

namespace deeprd {

inline constexpr const char* kVersion = "0.1.0";

}
