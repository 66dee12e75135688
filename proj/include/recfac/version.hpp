#pragma once

namespace recfac {

inline constexpr const char* kVersion = "0.3.0";

}  // namespace recfac
