#pragma once

namespace ntf {

inline constexpr const char* kVersion = "0.1.0";

}
