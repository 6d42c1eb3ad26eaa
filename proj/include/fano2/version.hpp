#pragma once

namespace fano2 {

inline constexpr const char* kEngineVersion = "0.1.0";

}  // namespace fano2
