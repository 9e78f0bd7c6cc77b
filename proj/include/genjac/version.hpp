#pragma once

namespace genjac {

inline constexpr const char* kVersion = "1.0.0";

}
