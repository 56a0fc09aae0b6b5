#pragma once

namespace sbg {

inline constexpr char kVersion[] = "0.1.0";

}  // namespace sbg
