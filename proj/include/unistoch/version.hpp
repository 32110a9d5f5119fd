#pragma once

namespace unistoch {

inline constexpr const char* kVersion = "0.1.0";

}
